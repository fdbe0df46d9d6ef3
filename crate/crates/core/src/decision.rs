//! Ranks the universe of a dataset by score sums.
//!
//! For each element, the scores of every value it receives under an agree
//! record are summed, likewise under disagree records, and the element's
//! final score is the difference. Elements that never appear score zero on
//! both sides. Ties fall through to the net accuracy sum, then the net
//! certainty sum, then the element id.
//!
//! Sums run over records in canonical key order for every element, so the
//! parallel and sequential paths produce bit-identical results.

use std::cmp::Ordering;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::number::{Bnn, Tolerance};
use crate::set::{Opinion, SoftExpertSet};

/// How per-element sums are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedAlternative {
    pub element: String,
    pub agree_score: f64,
    pub disagree_score: f64,
    /// `agree_score - disagree_score`.
    pub final_score: f64,
    /// Net accuracy (agree minus disagree); first tie-break.
    pub accuracy_sum: f64,
    /// Net certainty (agree minus disagree); second tie-break.
    pub certainty_sum: f64,
    /// 1-based position.
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Ranking {
    alternatives: Vec<RankedAlternative>,
}

impl Ranking {
    pub fn iter(&self) -> std::slice::Iter<'_, RankedAlternative> {
        self.alternatives.iter()
    }

    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    pub fn as_slice(&self) -> &[RankedAlternative] {
        &self.alternatives
    }

    pub fn get(&self, element: &str) -> Option<&RankedAlternative> {
        self.alternatives.iter().find(|a| a.element == element)
    }

    /// Element ids, best first.
    pub fn order(&self) -> Vec<&str> {
        self.alternatives
            .iter()
            .map(|a| a.element.as_str())
            .collect()
    }
}

impl<'a> IntoIterator for &'a Ranking {
    type Item = &'a RankedAlternative;
    type IntoIter = std::slice::Iter<'a, RankedAlternative>;

    fn into_iter(self) -> Self::IntoIter {
        self.alternatives.iter()
    }
}

#[derive(Default)]
struct Sums {
    agree: f64,
    disagree: f64,
    accuracy: f64,
    certainty: f64,
}

fn element_sums(set: &SoftExpertSet, element: &str) -> Sums {
    let mut s = Sums::default();
    for (key, values) in set {
        let Some(v) = values.get(element) else {
            continue;
        };
        match key.opinion() {
            Opinion::Agree => {
                s.agree += v.score();
                s.accuracy += v.accuracy();
                s.certainty += v.certainty();
            }
            Opinion::Disagree => {
                s.disagree += v.score();
                s.accuracy -= v.accuracy();
                s.certainty -= v.certainty();
            }
        }
    }
    s
}

fn all_sums(set: &SoftExpertSet, universe: &[String], exec: Execution) -> Vec<Sums> {
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => universe.par_iter().map(|u| element_sums(set, u)).collect(),
        _ => universe.iter().map(|u| element_sums(set, u)).collect(),
    }
}

fn by_rank_order(a: &RankedAlternative, b: &RankedAlternative) -> Ordering {
    b.final_score
        .total_cmp(&a.final_score)
        .then_with(|| b.accuracy_sum.total_cmp(&a.accuracy_sum))
        .then_with(|| b.certainty_sum.total_cmp(&a.certainty_sum))
        .then_with(|| a.element.cmp(&b.element))
}

pub fn rank(dataset: &Dataset) -> Result<Ranking> {
    rank_with(dataset, Execution::default())
}

pub fn rank_with(dataset: &Dataset, exec: Execution) -> Result<Ranking> {
    let universe = dataset.universe();
    if universe.is_empty() {
        return Err(Error::validation(
            "universe",
            "cannot rank an empty universe",
        ));
    }
    let sums = all_sums(dataset.set(), universe, exec);
    let mut alternatives: Vec<RankedAlternative> = universe
        .iter()
        .zip(sums)
        .map(|(u, s)| RankedAlternative {
            element: u.clone(),
            agree_score: s.agree,
            disagree_score: s.disagree,
            final_score: s.agree - s.disagree,
            accuracy_sum: s.accuracy,
            certainty_sum: s.certainty,
            rank: 0,
        })
        .collect();
    alternatives.sort_by(by_rank_order);
    for (i, alt) in alternatives.iter_mut().enumerate() {
        alt.rank = i + 1;
    }
    Ok(Ranking { alternatives })
}

/// Same order as [`Bnn::compare`].
pub fn compare_values(a: Bnn, b: Bnn, tol: Tolerance) -> Ordering {
    a.compare(b, tol)
}
