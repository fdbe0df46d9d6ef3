//! Bipolar neutrosophic soft expert sets.
//!
//! * [`number`]: six-component bipolar neutrosophic values, their arithmetic
//!   and the score / accuracy / certainty order.
//! * [`set`]: soft expert sets keyed by (parameter, expert, opinion), with
//!   subset, equality, complement, null, agree/disagree restriction, union
//!   and intersection.
//! * [`decision`]: score-sum ranking of a dataset's universe.
//! * [`dataset`]: the JSON dataset document and CSV exports.
//! * [`cli`]: the `bnses` command.
//!
//! With the default `parallel` feature, ranking computes per-element sums
//! on the rayon pool; without it the same code runs sequentially.

pub mod cli;
pub mod dataset;
pub mod decision;
pub mod error;
pub mod number;
pub mod set;

pub use dataset::Dataset;
pub use decision::{rank, rank_with, Execution, RankedAlternative, Ranking};
pub use error::{Error, ErrorCategory, Result};
pub use number::{BipolarNeutrosophicNumber, Bnn, Component, Tolerance};
pub use set::{AssessmentKey, Opinion, ParameterLiteral, SoftExpertSet};
