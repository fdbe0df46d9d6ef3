//! Bipolar neutrosophic numbers: six membership degrees, three on the
//! positive pole in `[0, 1]` and three on the negative pole in `[-1, 0]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Absolute slack used when comparing reals that came out of floating point.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-9);

    pub fn new(eps: f64) -> Result<Self> {
        if eps.is_finite() && eps >= 0.0 {
            Ok(Tolerance(eps))
        } else {
            Err(Error::Domain(format!(
                "tolerance must be a finite non-negative real, got {eps}"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn eq(self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.0
    }

    /// Three-way comparison treating values within the tolerance as equal.
    #[inline]
    pub fn cmp(self, a: f64, b: f64) -> Ordering {
        if self.eq(a, b) {
            Ordering::Equal
        } else if a < b {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

/// Names one of the six membership degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    TruthPos,
    IndeterminacyPos,
    FalsityPos,
    TruthNeg,
    IndeterminacyNeg,
    FalsityNeg,
}

impl Component {
    pub const ALL: [Component; 6] = [
        Component::TruthPos,
        Component::IndeterminacyPos,
        Component::FalsityPos,
        Component::TruthNeg,
        Component::IndeterminacyNeg,
        Component::FalsityNeg,
    ];

    pub fn is_positive(self) -> bool {
        matches!(
            self,
            Component::TruthPos | Component::IndeterminacyPos | Component::FalsityPos
        )
    }

    pub fn bounds(self) -> (f64, f64) {
        if self.is_positive() {
            (0.0, 1.0)
        } else {
            (-1.0, 0.0)
        }
    }

    pub(crate) fn range_label(self) -> &'static str {
        if self.is_positive() {
            "[0, 1]"
        } else {
            "[-1, 0]"
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::TruthPos => "T+",
            Component::IndeterminacyPos => "I+",
            Component::FalsityPos => "F+",
            Component::TruthNeg => "T-",
            Component::IndeterminacyNeg => "I-",
            Component::FalsityNeg => "F-",
        })
    }
}

/// A single bipolar neutrosophic judgment `<T+, I+, F+, T-, I-, F->`.
///
/// Construction validates every component, so any value of this type is in
/// range. Results of the arithmetic below are snapped back onto the closed
/// intervals to absorb rounding at the endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BipolarNeutrosophicNumber {
    c: [f64; 6],
}

pub type Bnn = BipolarNeutrosophicNumber;

impl BipolarNeutrosophicNumber {
    pub const ZERO: Bnn = Bnn { c: [0.0; 6] };
    /// Neutral element of [`Bnn::add`].
    pub const ADD_IDENTITY: Bnn = Bnn {
        c: [0.0, 1.0, 1.0, -1.0, 0.0, 0.0],
    };
    /// Neutral element of [`Bnn::multiply`].
    pub const MUL_IDENTITY: Bnn = Bnn {
        c: [1.0, 0.0, 0.0, 0.0, -1.0, -1.0],
    };

    pub fn new(
        t_pos: f64,
        i_pos: f64,
        f_pos: f64,
        t_neg: f64,
        i_neg: f64,
        f_neg: f64,
    ) -> Result<Self> {
        Self::from_array([t_pos, i_pos, f_pos, t_neg, i_neg, f_neg])
    }

    /// Components in the order `[T+, I+, F+, T-, I-, F-]`.
    pub fn from_array(c: [f64; 6]) -> Result<Self> {
        for comp in Component::ALL {
            let v = c[comp.index()];
            let (lo, hi) = comp.bounds();
            if !(lo..=hi).contains(&v) {
                return Err(Error::OutOfRange {
                    component: comp,
                    value: v,
                });
            }
        }
        // `+ 0.0` folds -0.0 into 0.0 so equal values serialize identically.
        Ok(Bnn {
            c: c.map(|v| v + 0.0),
        })
    }

    fn snapped(c: [f64; 6]) -> Self {
        let mut out = [0.0; 6];
        for comp in Component::ALL {
            let (lo, hi) = comp.bounds();
            out[comp.index()] = c[comp.index()].clamp(lo, hi) + 0.0;
        }
        Bnn { c: out }
    }

    pub fn to_array(self) -> [f64; 6] {
        self.c
    }

    pub fn get(self, comp: Component) -> f64 {
        self.c[comp.index()]
    }

    pub fn t_pos(self) -> f64 {
        self.c[0]
    }
    pub fn i_pos(self) -> f64 {
        self.c[1]
    }
    pub fn f_pos(self) -> f64 {
        self.c[2]
    }
    pub fn t_neg(self) -> f64 {
        self.c[3]
    }
    pub fn i_neg(self) -> f64 {
        self.c[4]
    }
    pub fn f_neg(self) -> f64 {
        self.c[5]
    }

    /// `lambda * a`.
    pub fn scale(self, lambda: f64) -> Result<Self> {
        check_exponent(lambda)?;
        if lambda == 1.0 {
            return Ok(self);
        }
        let [tp, ip, fp, tn, in_, fn_] = self.c;
        Ok(Self::snapped([
            1.0 - (1.0 - tp).powf(lambda),
            ip.powf(lambda),
            fp.powf(lambda),
            -(-tn).powf(lambda),
            -(-in_).powf(lambda),
            -(1.0 - (1.0 + fn_).powf(lambda)),
        ]))
    }

    /// `a ^ lambda`.
    pub fn power(self, lambda: f64) -> Result<Self> {
        check_exponent(lambda)?;
        if lambda == 1.0 {
            return Ok(self);
        }
        let [tp, ip, fp, tn, in_, fn_] = self.c;
        Ok(Self::snapped([
            tp.powf(lambda),
            1.0 - (1.0 - ip).powf(lambda),
            1.0 - (1.0 - fp).powf(lambda),
            -(1.0 - (1.0 + tn).powf(lambda)),
            -(-in_).powf(lambda),
            -(-fn_).powf(lambda),
        ]))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Self) -> Self {
        let [tp1, ip1, fp1, tn1, in1, fn1] = self.c;
        let [tp2, ip2, fp2, tn2, in2, fn2] = other.c;
        Self::snapped([
            tp1 + tp2 - tp1 * tp2,
            ip1 * ip2,
            fp1 * fp2,
            -(tn1 * tn2),
            -(-in1 - in2 - in1 * in2),
            -(-fn1 - fn2 - fn1 * fn2),
        ])
    }

    pub fn multiply(self, other: Self) -> Self {
        let [tp1, ip1, fp1, tn1, in1, fn1] = self.c;
        let [tp2, ip2, fp2, tn2, in2, fn2] = other.c;
        Self::snapped([
            tp1 * tp2,
            ip1 + ip2 - ip1 * ip2,
            fp1 + fp2 - fp1 * fp2,
            -(-tn1 - tn2 - tn1 * tn2),
            -(in1 * in2),
            -(fn1 * fn2),
        ])
    }

    /// In `[0, 1]`.
    pub fn score(self) -> f64 {
        let [tp, ip, fp, tn, in_, fn_] = self.c;
        (tp + 1.0 - ip + 1.0 - fp + 1.0 + tn - in_ - fn_) / 6.0
    }

    /// In `[-2, 2]`.
    pub fn accuracy(self) -> f64 {
        self.t_pos() - self.f_pos() + self.t_neg() - self.f_neg()
    }

    /// In `[0, 2]`.
    pub fn certainty(self) -> f64 {
        self.t_pos() - self.f_neg()
    }

    /// Lexicographic order on (score, accuracy, certainty); each tier ties
    /// when the two functionals differ by at most `tol`.
    pub fn compare(self, other: Self, tol: Tolerance) -> Ordering {
        tol.cmp(self.score(), other.score())
            .then_with(|| tol.cmp(self.accuracy(), other.accuracy()))
            .then_with(|| tol.cmp(self.certainty(), other.certainty()))
    }

    /// Swaps truth and falsity on both poles, indeterminacy untouched.
    pub fn complement(self) -> Self {
        let [tp, ip, fp, tn, in_, fn_] = self.c;
        Bnn {
            c: [fp, ip, tp, fn_, in_, tn],
        }
    }

    /// Pointwise union combiner: truth strengthened, falsity weakened on
    /// each pole, indeterminacy averaged.
    pub fn union_with(self, other: Self) -> Self {
        let [tp1, ip1, fp1, tn1, in1, fn1] = self.c;
        let [tp2, ip2, fp2, tn2, in2, fn2] = other.c;
        Self::snapped([
            tp1.max(tp2),
            (ip1 + ip2) / 2.0,
            fp1.min(fp2),
            tn1.min(tn2),
            (in1 + in2) / 2.0,
            fn1.max(fn2),
        ])
    }

    /// Pointwise intersection combiner, dual of [`Bnn::union_with`].
    pub fn intersect_with(self, other: Self) -> Self {
        let [tp1, ip1, fp1, tn1, in1, fn1] = self.c;
        let [tp2, ip2, fp2, tn2, in2, fn2] = other.c;
        Self::snapped([
            tp1.min(tp2),
            (ip1 + ip2) / 2.0,
            fp1.max(fp2),
            tn1.max(tn2),
            (in1 + in2) / 2.0,
            fn1.min(fn2),
        ])
    }

    pub fn approx_eq(self, other: Self, tol: Tolerance) -> bool {
        self.c
            .iter()
            .zip(other.c.iter())
            .all(|(a, b)| tol.eq(*a, *b))
    }

    pub fn is_zero(self, tol: Tolerance) -> bool {
        self.c.iter().all(|v| tol.eq(*v, 0.0))
    }
}

fn check_exponent(lambda: f64) -> Result<()> {
    if lambda.is_finite() && lambda > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "exponent must be a finite positive real, got {lambda}"
        )))
    }
}

impl Add for Bnn {
    type Output = Bnn;

    fn add(self, rhs: Bnn) -> Bnn {
        Bnn::add(self, rhs)
    }
}

impl Mul for Bnn {
    type Output = Bnn;

    fn mul(self, rhs: Bnn) -> Bnn {
        Bnn::multiply(self, rhs)
    }
}

impl fmt::Display for Bnn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [tp, ip, fp, tn, in_, fn_] = self.c;
        write!(f, "<{tp}, {ip}, {fp}, {tn}, {in_}, {fn_}>")
    }
}

/// Parses six comma-separated reals, e.g. `"0.3,0.5,0.7,-0.2,-0.3,-0.4"`.
/// Angle brackets and surrounding whitespace are tolerated.
impl FromStr for Bnn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('<').trim_end_matches('>');
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::Domain(format!(
                "expected six comma-separated components, found {} in {s:?}",
                parts.len()
            )));
        }
        let mut c = [0.0; 6];
        for (slot, part) in c.iter_mut().zip(&parts) {
            *slot = part
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::Domain(format!("{part:?} is not a finite real")))?;
        }
        Bnn::from_array(c)
    }
}

pub fn ordering_label(ord: Ordering) -> &'static str {
    match ord {
        Ordering::Less => "LESS",
        Ordering::Equal => "EQUAL",
        Ordering::Greater => "GREATER",
    }
}
