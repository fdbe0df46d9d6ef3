//! Soft expert sets: maps from (parameter, expert, opinion) keys to per-element
//! bipolar neutrosophic values, and the set algebra over them.
//!
//! The representation is sparse. A `(key, element)` pair that is not stored is
//! absent, not zero. Keys and elements iterate in a fixed canonical order.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::number::{Bnn, Tolerance};

/// A decision parameter `e`, or its negation `not e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParameterLiteral {
    name: String,
    negated: bool,
}

impl ParameterLiteral {
    pub fn new(name: impl Into<String>, negated: bool) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::validation("parameter", "name must be nonempty"));
        }
        Ok(ParameterLiteral { name, negated })
    }

    pub fn positive(name: impl Into<String>) -> Result<Self> {
        Self::new(name, false)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    pub fn negate(&self) -> Self {
        ParameterLiteral {
            name: self.name.clone(),
            negated: !self.negated,
        }
    }
}

impl fmt::Display for ParameterLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "not {}", self.name)
        } else {
            f.write_str(&self.name)
        }
    }
}

/// The `NOT` set of a parameter set: every literal negated.
pub fn not_set<'a, I>(params: I) -> Vec<ParameterLiteral>
where
    I: IntoIterator<Item = &'a ParameterLiteral>,
{
    params.into_iter().map(ParameterLiteral::negate).collect()
}

/// Ordered so that `Disagree < Agree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Opinion {
    Disagree,
    Agree,
}

impl Opinion {
    pub fn code(self) -> u8 {
        match self {
            Opinion::Disagree => 0,
            Opinion::Agree => 1,
        }
    }

    pub fn from_code(code: u64) -> Option<Self> {
        match code {
            0 => Some(Opinion::Disagree),
            1 => Some(Opinion::Agree),
            _ => None,
        }
    }
}

/// One element of `parameters x experts x opinions`.
///
/// Field order gives the canonical key order: parameter name, negation,
/// expert, opinion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AssessmentKey {
    parameter: ParameterLiteral,
    expert: String,
    opinion: Opinion,
}

impl AssessmentKey {
    pub fn new(
        parameter: ParameterLiteral,
        expert: impl Into<String>,
        opinion: Opinion,
    ) -> Result<Self> {
        let expert = expert.into();
        if expert.is_empty() {
            return Err(Error::validation("expert", "id must be nonempty"));
        }
        Ok(AssessmentKey {
            parameter,
            expert,
            opinion,
        })
    }

    pub fn parameter(&self) -> &ParameterLiteral {
        &self.parameter
    }

    pub fn expert(&self) -> &str {
        &self.expert
    }

    pub fn opinion(&self) -> Opinion {
        self.opinion
    }

    /// Same expert and opinion, parameter negated.
    pub fn complement(&self) -> Self {
        AssessmentKey {
            parameter: self.parameter.negate(),
            expert: self.expert.clone(),
            opinion: self.opinion,
        }
    }
}

impl fmt::Display for AssessmentKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.parameter,
            self.expert,
            self.opinion.code()
        )
    }
}

pub type ElementMap = BTreeMap<String, Bnn>;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SoftExpertSet {
    entries: BTreeMap<AssessmentKey, ElementMap>,
}

impl SoftExpertSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stores `value` at `(key, element)`, returning the value it replaced.
    pub fn insert(
        &mut self,
        key: AssessmentKey,
        element: impl Into<String>,
        value: Bnn,
    ) -> Option<Bnn> {
        self.entries
            .entry(key)
            .or_default()
            .insert(element.into(), value)
    }

    /// Adds a whole record. An empty map leaves the set unchanged.
    pub fn insert_record(&mut self, key: AssessmentKey, values: ElementMap) {
        if values.is_empty() {
            return;
        }
        self.entries.entry(key).or_default().extend(values);
    }

    pub fn get(&self, key: &AssessmentKey, element: &str) -> Option<Bnn> {
        self.entries.get(key).and_then(|m| m.get(element)).copied()
    }

    pub fn record(&self, key: &AssessmentKey) -> Option<&ElementMap> {
        self.entries.get(key)
    }

    pub fn records(&self) -> btree_map::Iter<'_, AssessmentKey, ElementMap> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &AssessmentKey> {
        self.entries.keys()
    }

    /// Every stored `(key, element, value)` in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (&AssessmentKey, &str, Bnn)> {
        self.entries
            .iter()
            .flat_map(|(k, m)| m.iter().map(move |(u, v)| (k, u.as_str(), *v)))
    }

    pub fn record_count(&self) -> usize {
        self.entries.len()
    }

    pub fn support_len(&self) -> usize {
        self.entries.values().map(BTreeMap::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Support containment plus the componentwise order at every shared
    /// point: truth and indeterminacy grow, falsity shrinks on the positive
    /// pole, and the reverse on the negative pole.
    pub fn is_subset(&self, other: &Self, tol: Tolerance) -> bool {
        let eps = tol.get();
        self.support().all(|(key, u, g)| match other.get(key, u) {
            None => false,
            Some(h) => {
                g.t_pos() <= h.t_pos() + eps
                    && g.i_pos() <= h.i_pos() + eps
                    && g.f_pos() + eps >= h.f_pos()
                    && g.t_neg() + eps >= h.t_neg()
                    && g.i_neg() + eps >= h.i_neg()
                    && g.f_neg() <= h.f_neg() + eps
            }
        })
    }

    pub fn is_superset(&self, other: &Self, tol: Tolerance) -> bool {
        other.is_subset(self, tol)
    }

    pub fn equals(&self, other: &Self, tol: Tolerance) -> bool {
        self.support_len() == other.support_len()
            && self
                .support()
                .all(|(key, u, a)| other.get(key, u).is_some_and(|b| a.approx_eq(b, tol)))
    }

    /// Moves every key onto the negated parameter and swaps truth with
    /// falsity in every value.
    pub fn complement(&self) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|(k, m)| {
                let values = m.iter().map(|(u, v)| (u.clone(), v.complement())).collect();
                (k.complement(), values)
            })
            .collect();
        SoftExpertSet { entries }
    }

    /// The all-zero set over `keys x universe`.
    pub fn make_null<'a, K, U>(keys: K, universe: U) -> Self
    where
        K: IntoIterator<Item = &'a AssessmentKey>,
        U: IntoIterator<Item = &'a str>,
        U::IntoIter: Clone,
    {
        let universe = universe.into_iter();
        let mut set = SoftExpertSet::new();
        for key in keys {
            let values: ElementMap = universe
                .clone()
                .map(|u| (u.to_owned(), Bnn::ZERO))
                .collect();
            set.insert_record(key.clone(), values);
        }
        set
    }

    /// True when every stored component is zero; vacuously true when empty.
    pub fn is_null(&self, tol: Tolerance) -> bool {
        self.support().all(|(_, _, v)| v.is_zero(tol))
    }

    pub fn restrict(&self, opinion: Opinion) -> Self {
        let entries = self
            .entries
            .iter()
            .filter(|(k, _)| k.opinion == opinion)
            .map(|(k, m)| (k.clone(), m.clone()))
            .collect();
        SoftExpertSet { entries }
    }

    pub fn restrict_agree(&self) -> Self {
        self.restrict(Opinion::Agree)
    }

    pub fn restrict_disagree(&self) -> Self {
        self.restrict(Opinion::Disagree)
    }

    /// Combines shared points with [`Bnn::union_with`]; points present in
    /// only one operand are copied through.
    pub fn union(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        for (key, theirs) in &other.entries {
            let ours = entries.entry(key.clone()).or_default();
            for (u, g) in theirs {
                ours.entry(u.clone())
                    .and_modify(|h| *h = h.union_with(*g))
                    .or_insert(*g);
            }
        }
        SoftExpertSet { entries }
    }

    /// Keeps only points present in both operands, combined with
    /// [`Bnn::intersect_with`].
    pub fn intersection(&self, other: &Self) -> Self {
        let mut set = SoftExpertSet::new();
        for (key, ours) in &self.entries {
            let Some(theirs) = other.entries.get(key) else {
                continue;
            };
            let values: ElementMap = ours
                .iter()
                .filter_map(|(u, h)| theirs.get(u).map(|g| (u.clone(), h.intersect_with(*g))))
                .collect();
            set.insert_record(key.clone(), values);
        }
        set
    }
}

impl<'a> IntoIterator for &'a SoftExpertSet {
    type Item = (&'a AssessmentKey, &'a ElementMap);
    type IntoIter = btree_map::Iter<'a, AssessmentKey, ElementMap>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

impl FromIterator<(AssessmentKey, String, Bnn)> for SoftExpertSet {
    fn from_iter<T: IntoIterator<Item = (AssessmentKey, String, Bnn)>>(iter: T) -> Self {
        let mut set = SoftExpertSet::new();
        for (k, u, v) in iter {
            set.insert(k, u, v);
        }
        set
    }
}
