#![allow(dead_code)]

use std::path::PathBuf;

use bnses::{AssessmentKey, Bnn, Dataset, Opinion, ParameterLiteral, SoftExpertSet};
use proptest::prelude::*;
use rand::Rng;

pub const EPS: f64 = 1e-9;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> Dataset {
    let bytes = std::fs::read(fixture_path(name)).unwrap();
    bnses::dataset::parse(&bytes).unwrap()
}

pub fn v(c: [f64; 6]) -> Bnn {
    Bnn::from_array(c).unwrap()
}

pub fn key(param: &str, expert: &str, opinion: u8) -> AssessmentKey {
    let o = if opinion == 1 {
        Opinion::Agree
    } else {
        Opinion::Disagree
    };
    AssessmentKey::new(ParameterLiteral::positive(param).unwrap(), expert, o).unwrap()
}

pub fn close(a: Bnn, b: [f64; 6]) -> bool {
    a.to_array()
        .iter()
        .zip(b.iter())
        .all(|(x, y)| (x - y).abs() <= EPS)
}

/// Mostly uniform components, with endpoints mixed in.
pub fn random_component<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    match rng.gen_range(0..10) {
        0 => lo,
        1 => hi,
        _ => rng.gen_range(lo..=hi),
    }
}

pub fn random_value<R: Rng>(rng: &mut R) -> Bnn {
    let mut c = [0.0; 6];
    for (i, slot) in c.iter_mut().enumerate() {
        *slot = if i < 3 {
            random_component(rng, 0.0, 1.0)
        } else {
            random_component(rng, -1.0, 0.0)
        };
    }
    v(c)
}

pub const UNIVERSE: [&str; 4] = ["u1", "u2", "u3", "u4"];
pub const EXPERTS: [&str; 3] = ["p", "q", "r"];
pub const PARAMS: [&str; 2] = ["e1", "e2"];

pub fn all_keys() -> Vec<AssessmentKey> {
    let mut keys = Vec::new();
    for p in PARAMS {
        for negated in [false, true] {
            for x in EXPERTS {
                for o in [Opinion::Agree, Opinion::Disagree] {
                    keys.push(
                        AssessmentKey::new(ParameterLiteral::new(p, negated).unwrap(), x, o)
                            .unwrap(),
                    );
                }
            }
        }
    }
    keys
}

/// Each (key, element) point present with probability `density`.
pub fn random_set<R: Rng>(rng: &mut R, density: f64) -> SoftExpertSet {
    let mut set = SoftExpertSet::new();
    for k in all_keys() {
        for u in UNIVERSE {
            if rng.gen_bool(density) {
                set.insert(k.clone(), u, random_value(rng));
            }
        }
    }
    set
}

pub fn declared(set: SoftExpertSet) -> Dataset {
    let ids = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    Dataset::new(ids(&UNIVERSE), ids(&EXPERTS), ids(&PARAMS), set).unwrap()
}

pub fn random_dataset<R: Rng>(rng: &mut R) -> Dataset {
    let density = rng.gen_range(0.0..=1.0);
    declared(random_set(rng, density))
}

// proptest strategies

fn pos() -> impl Strategy<Value = f64> {
    prop_oneof![1 => Just(0.0), 1 => Just(1.0), 8 => 0.0..=1.0f64]
}

fn neg() -> impl Strategy<Value = f64> {
    prop_oneof![1 => Just(0.0), 1 => Just(-1.0), 8 => -1.0..=0.0f64]
}

pub fn value() -> impl Strategy<Value = Bnn> {
    (pos(), pos(), pos(), neg(), neg(), neg()).prop_map(|(a, b, c, d, e, f)| v([a, b, c, d, e, f]))
}

pub fn soft_set() -> impl Strategy<Value = SoftExpertSet> {
    let n = all_keys().len() * UNIVERSE.len();
    prop::collection::vec(prop::option::weighted(0.4, value()), n).prop_map(|slots| {
        let keys = all_keys();
        let mut set = SoftExpertSet::new();
        for (i, slot) in slots.into_iter().enumerate() {
            if let Some(val) = slot {
                set.insert(
                    keys[i / UNIVERSE.len()].clone(),
                    UNIVERSE[i % UNIVERSE.len()],
                    val,
                );
            }
        }
        set
    })
}
