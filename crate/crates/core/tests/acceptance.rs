//! Acceptance criteria. Runs every criterion, prints one line each, and
//! exits non-zero if any fails.

mod common;

use std::process::ExitCode;

use bnses::{dataset, rank, Bnn, SoftExpertSet, Tolerance};
use common::{close, fixture, key, random_dataset, random_set, random_value, v};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EPS: f64 = 1e-9;
const TOL: Tolerance = Tolerance::DEFAULT;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn union_example() -> Check {
    let h = fixture("combine_h.json").into_set();
    let g = fixture("combine_g.json").into_set();
    let r = h.union(&g);
    let p = key("e1", "p", 1);
    let got = r.get(&p, "u1").ok_or("u1 missing")?;
    ensure(close(got, [0.2, 0.55, 0.2, -0.4, -0.2, -0.4]), || {
        format!("u1 = {got}")
    })?;
    let u2 = r.get(&p, "u2").ok_or("u2 missing")?;
    ensure(u2 == g.get(&p, "u2").unwrap(), || format!("u2 = {u2}"))?;
    let u3 = r.get(&p, "u3").ok_or("u3 missing")?;
    ensure(u3 == h.get(&p, "u3").unwrap(), || format!("u3 = {u3}"))?;
    ensure(close(u3, [0.2, 0.6, 0.5, -0.2, -0.1, -0.4]), || {
        format!("u3 = {u3}")
    })
}

fn intersection_example() -> Check {
    let h = fixture("combine_h.json").into_set();
    let g = fixture("combine_g.json").into_set();
    let r = h.intersection(&g);
    let p = key("e1", "p", 1);
    let got = r.get(&p, "u1").ok_or("u1 missing")?;
    ensure(close(got, [0.1, 0.55, 0.8, -0.3, -0.2, -0.5]), || {
        format!("u1 = {got}")
    })?;
    ensure(
        r.get(&p, "u2").is_none() && r.get(&p, "u3").is_none(),
        || "u2/u3 kept".into(),
    )?;
    ensure(r.support_len() == 1, || {
        format!("support {}", r.support_len())
    })
}

fn subset_example() -> Check {
    let h = fixture("pricing_h.json").into_set();
    let g = fixture("pricing_g.json").into_set();
    ensure(g.is_subset(&h, TOL), || "G not subset of H".into())?;
    ensure(!h.is_subset(&g, TOL), || "H subset of G".into())
}

fn restriction_examples() -> Check {
    let h = fixture("notebooks.json").into_set();
    let exact = Tolerance::new(0.0).unwrap();
    let agree = h.restrict_agree();
    let disagree = h.restrict_disagree();
    ensure(
        agree.record_count() == 6 && disagree.record_count() == 6,
        || {
            format!(
                "{} + {} records",
                agree.record_count(),
                disagree.record_count()
            )
        },
    )?;
    ensure(
        agree.equals(fixture("notebooks_agree.json").set(), exact),
        || "agree listing differs".into(),
    )?;
    ensure(
        disagree.equals(fixture("notebooks_disagree.json").set(), exact),
        || "disagree listing differs".into(),
    )
}

/// The arithmetic formulas evaluated directly, without any range snapping.
fn raw_ops(a: [f64; 6], b: [f64; 6], l: f64) -> [[f64; 6]; 4] {
    let [tp, ip, fp, tn, in_, fn_] = a;
    let [tp2, ip2, fp2, tn2, in2, fn2] = b;
    [
        [
            1.0 - (1.0 - tp).powf(l),
            ip.powf(l),
            fp.powf(l),
            -(-tn).powf(l),
            -(-in_).powf(l),
            -(1.0 - (1.0 - (-fn_)).powf(l)),
        ],
        [
            tp.powf(l),
            1.0 - (1.0 - ip).powf(l),
            1.0 - (1.0 - fp).powf(l),
            -(1.0 - (1.0 - (-tn)).powf(l)),
            -(-in_).powf(l),
            -(-fn_).powf(l),
        ],
        [
            tp + tp2 - tp * tp2,
            ip * ip2,
            fp * fp2,
            -tn * tn2,
            -(-in_ - in2 - in_ * in2),
            -(-fn_ - fn2 - fn_ * fn2),
        ],
        [
            tp * tp2,
            ip + ip2 - ip * ip2,
            fp + fp2 - fp * fp2,
            -(-tn - tn2 - tn * tn2),
            -in_ * in2,
            -fn_ * fn2,
        ],
    ]
}

fn within_interval(c: &[f64; 6], slack: f64) -> bool {
    c.iter().enumerate().all(|(i, x)| {
        let (lo, hi) = if i < 3 { (0.0, 1.0) } else { (-1.0, 0.0) };
        *x >= lo - slack && *x <= hi + slack
    })
}

fn closure() -> Check {
    let mut rng = rng(5);
    for trial in 0..10_000 {
        let a = random_value(&mut rng);
        let b = random_value(&mut rng);
        // (0, 8]: open at zero
        let lambda = 8.0 - rng.gen_range(0.0..8.0);
        let got = [
            a.scale(lambda).unwrap(),
            a.power(lambda).unwrap(),
            a + b,
            a * b,
        ];
        let raw = raw_ops(a.to_array(), b.to_array(), lambda);
        for (op, (g, r)) in got.iter().zip(raw.iter()).enumerate() {
            let g = g.to_array();
            ensure(within_interval(&g, EPS), || {
                format!("trial {trial} op {op}: {g:?}")
            })?;
            ensure(within_interval(r, EPS), || {
                format!("trial {trial} op {op}: raw {r:?}")
            })?;
            ensure(g.iter().zip(r).all(|(x, y)| (x - y).abs() <= EPS), || {
                format!("trial {trial} op {op}: {g:?} vs raw {r:?}")
            })?;
        }
    }
    Ok(())
}

fn proposition_suite() -> Check {
    let mut rng = rng(31);
    let phi = SoftExpertSet::new();
    for i in 0..1_000 {
        let dh = rng.gen_range(0.0..=1.0);
        let dg = rng.gen_range(0.0..=1.0);
        let h = random_set(&mut rng, dh);
        let g = random_set(&mut rng, dg);
        ensure(h.union(&g).equals(&g.union(&h), TOL), || {
            format!("union commutativity, instance {i}")
        })?;
        ensure(h.intersection(&g).equals(&g.intersection(&h), TOL), || {
            format!("intersection commutativity, instance {i}")
        })?;
        ensure(h.complement().complement().equals(&h, TOL), || {
            format!("involution, instance {i}")
        })?;
        ensure(h.union(&phi).equals(&h, TOL), || {
            format!("union with empty, instance {i}")
        })?;
        ensure(h.intersection(&phi).equals(&phi, TOL), || {
            format!("intersection with empty, instance {i}")
        })?;
    }
    Ok(())
}

fn de_morgan_and_witness() -> Check {
    let mut rng = rng(77);
    for i in 0..10_000 {
        let a = random_value(&mut rng);
        let b = random_value(&mut rng);
        let lhs = a.union_with(b).complement();
        let rhs = a.complement().intersect_with(b.complement());
        ensure(lhs.approx_eq(rhs, TOL), || {
            format!("pair {i}: {lhs} vs {rhs}")
        })?;
    }
    let x = v([0.5, 0.0, 0.5, -0.5, -0.5, -0.5]);
    let y = v([0.5, 0.0, 0.5, -0.5, -0.5, -0.5]);
    let z = v([0.5, 1.0, 0.5, -0.5, -0.5, -0.5]);
    let left = x.union_with(y).union_with(z).i_pos();
    let right = x.union_with(y.union_with(z)).i_pos();
    ensure(
        (left - 0.5).abs() <= EPS && (right - 0.25).abs() <= EPS,
        || format!("witness gave {left} and {right}"),
    )?;
    ensure(left != right, || "union looked associative".into())
}

fn functional_bounds() -> Check {
    let mut rng = rng(13);
    for i in 0..10_000 {
        let a = random_value(&mut rng);
        let (s, acc, c) = (a.score(), a.accuracy(), a.certainty());
        ensure((0.0..=1.0).contains(&s), || format!("value {i}: score {s}"))?;
        ensure((-2.0..=2.0).contains(&acc), || {
            format!("value {i}: accuracy {acc}")
        })?;
        ensure((0.0..=2.0).contains(&c), || {
            format!("value {i}: certainty {c}")
        })?;
    }
    let zero = Bnn::ZERO.score();
    ensure((zero - 0.5).abs() <= 1e-12, || {
        format!("zero scores {zero}")
    })?;
    let top = v([1.0, 0.0, 0.0, 0.0, -1.0, -1.0]).score();
    ensure((top - 1.0).abs() <= 1e-12, || {
        format!("maximum scores {top}")
    })
}

/// The notebook judgments as literal tuples: (opinion, element, value).
const NOTEBOOK_RECORDS: [(u8, &str, [f64; 6]); 18] = [
    (1, "u1", [0.3, 0.5, 0.7, -0.2, -0.3, -0.4]),
    (1, "u3", [0.5, 0.6, 0.3, -0.3, -0.4, -0.1]),
    (1, "u2", [0.8, 0.2, 0.3, -0.1, -0.3, -0.5]),
    (1, "u3", [0.9, 0.5, 0.7, -0.4, -0.1, -0.2]),
    (1, "u1", [0.4, 0.7, 0.6, -0.6, -0.2, -0.4]),
    (1, "u1", [0.4, 0.2, 0.3, -0.2, -0.3, -0.1]),
    (1, "u2", [0.7, 0.1, 0.3, -0.3, -0.2, -0.5]),
    (1, "u3", [0.3, 0.4, 0.2, -0.5, -0.1, -0.4]),
    (1, "u2", [0.3, 0.4, 0.9, -0.4, -0.3, -0.1]),
    (0, "u2", [0.5, 0.2, 0.3, -0.5, -0.2, -0.3]),
    (0, "u1", [0.6, 0.3, 0.5, -0.4, -0.2, -0.6]),
    (0, "u2", [0.7, 0.6, 0.4, -0.3, -0.4, -0.5]),
    (0, "u3", [0.9, 0.5, 0.7, -0.2, -0.3, -0.5]),
    (0, "u3", [0.7, 0.9, 0.6, -0.2, -0.3, -0.4]),
    (0, "u1", [0.7, 0.3, 0.6, -0.3, -0.2, -0.4]),
    (0, "u2", [0.6, 0.2, 0.5, -0.3, -0.1, -0.4]),
    (0, "u1", [0.6, 0.2, 0.5, -0.5, -0.3, -0.2]),
    (0, "u3", [0.7, 0.2, 0.8, -0.6, -0.2, -0.1]),
];

/// Score sums worked out in exact rationals before the engine existed:
/// (element, agree sum, disagree sum), best first.
const FROZEN_ORACLE: [(&str, f64, f64); 3] = [
    ("u2", 97.0 / 60.0, 47.0 / 30.0),
    ("u3", 27.0 / 20.0, 7.0 / 5.0),
    ("u1", 13.0 / 10.0, 23.0 / 15.0),
];

fn notebook_ranking() -> Check {
    // brute-force recomputation straight from the tuples
    let mut sums: Vec<(&str, f64, f64)> =
        ["u1", "u2", "u3"].iter().map(|u| (*u, 0.0, 0.0)).collect();
    for (o, u, [tp, ip, fp, tn, in_, fn_]) in NOTEBOOK_RECORDS {
        let s = (tp + 1.0 - ip + 1.0 - fp + 1.0 + tn - in_ - fn_) / 6.0;
        let row = sums.iter_mut().find(|r| r.0 == u).unwrap();
        if o == 1 {
            row.1 += s;
        } else {
            row.2 += s;
        }
    }
    sums.sort_by(|a, b| (b.1 - b.2).total_cmp(&(a.1 - a.2)));
    for ((u, a, d), (fu, fa, fd)) in sums.iter().zip(FROZEN_ORACLE.iter()) {
        ensure(
            u == fu && (a - fa).abs() <= EPS && (d - fd).abs() <= EPS,
            || format!("brute force {u} {a} {d} disagrees with frozen {fu} {fa} {fd}"),
        )?;
    }

    let ranking = rank(&fixture("notebooks.json")).map_err(|e| e.to_string())?;
    ensure(ranking.len() == 3, || format!("{} rows", ranking.len()))?;
    for (i, (alt, (u, a, d))) in ranking.iter().zip(FROZEN_ORACLE.iter()).enumerate() {
        ensure(
            alt.element == *u
                && alt.rank == i + 1
                && (alt.agree_score - a).abs() <= EPS
                && (alt.disagree_score - d).abs() <= EPS
                && (alt.final_score - (a - d)).abs() <= EPS,
            || format!("row {i}: {alt:?}, oracle {u} {a} {d}"),
        )?;
    }
    Ok(())
}

fn round_trips() -> Check {
    let exact = Tolerance::new(0.0).unwrap();
    let check = |ds: &bnses::Dataset, label: &str| -> Check {
        let bytes = dataset::serialize(ds);
        let back = dataset::parse(&bytes).map_err(|e| format!("{label}: {e}"))?;
        ensure(back.equals(ds, exact), || {
            format!("{label}: parse(serialize(d)) != d")
        })?;
        ensure(dataset::serialize(ds) == bytes, || {
            format!("{label}: serialize not deterministic")
        })?;
        ensure(dataset::serialize(&back) == bytes, || {
            format!("{label}: not canonical")
        })
    };
    check(&fixture("notebooks.json"), "notebooks")?;
    let mut rng = rng(101);
    for i in 0..1_000 {
        check(&random_dataset(&mut rng), &format!("random dataset {i}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("union worked example", union_example),
        ("intersection worked example", intersection_example),
        ("subset worked example", subset_example),
        ("agree/disagree restriction listings", restriction_examples),
        ("arithmetic closure, 10^4 trials", closure),
        (
            "commutativity, involution and empty-set laws, 10^3 instances",
            proposition_suite,
        ),
        (
            "value De Morgan (10^4) and union non-associativity witness",
            de_morgan_and_witness,
        ),
        (
            "score/accuracy/certainty bounds, 10^4 values",
            functional_bounds,
        ),
        (
            "notebook ranking against score-sum oracle",
            notebook_ranking,
        ),
        (
            "dataset round-trip and determinism, 10^3 datasets",
            round_trips,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS  {:>2}  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
