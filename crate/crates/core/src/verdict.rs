//! Verdicts: computed Fujita numbers or intervals, with proof traces.
//!
//! A [`FujitaVerdict`] records lower and upper bounds for the convex Fujita
//! number, the ordered list of rules that produced them (each with a short
//! citation of the underlying criterion and an optional witness), and any
//! hypotheses that were declared rather than verified. Verdicts are plain
//! data: tests assert on the trace, and the CLI serializes it as JSON.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice::DivisorClass;
use crate::rational::{fmt_rat, rat, Rat};

/// A witness attached to a trace step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An ample class with its self-intersection, e.g. `L² = 1` on an extreme
    /// surface.
    AmpleClass {
        basis: Vec<String>,
        coords: Vec<String>,
        self_intersection: String,
    },
    /// A pair of ample effective classes with their intersection number,
    /// e.g. `C₁·C₂ = 1`.
    AmpleClassPair {
        basis: Vec<String>,
        first: Vec<String>,
        second: Vec<String>,
        pairing: String,
    },
    /// Free-form key/value record for non-class witnesses (slopes, degrees,
    /// fibration data, ...). Keys are sorted so serialization is stable.
    Record(BTreeMap<String, String>),
}

impl Witness {
    /// Class witness from a divisor class (records its self-intersection).
    pub fn ample_class(class: &DivisorClass) -> Witness {
        Witness::AmpleClass {
            basis: class.lattice().basis_labels().to_vec(),
            coords: class.coord_strings(),
            self_intersection: fmt_rat(&class.self_intersection()),
        }
    }

    /// Pair witness from two classes of the same lattice.
    pub fn ample_pair(first: &DivisorClass, second: &DivisorClass) -> Witness {
        let pairing = first
            .pair(second)
            .map(|p| fmt_rat(&p))
            .unwrap_or_else(|_| "?".to_string());
        Witness::AmpleClassPair {
            basis: first.lattice().basis_labels().to_vec(),
            first: first.coord_strings(),
            second: second.coord_strings(),
            pairing,
        }
    }

    /// Record witness from key/value pairs.
    pub fn record<K: Into<String>, V: Into<String>>(pairs: Vec<(K, V)>) -> Witness {
        Witness::Record(
            pairs
                .into_iter()
                .map(|(k, v)| (k.into(), v.into()))
                .collect(),
        )
    }

    /// True iff this witness certifies an extreme verdict: an ample class of
    /// self-intersection 1, or an ample effective pair meeting in one point.
    pub fn certifies_extreme(&self) -> bool {
        match self {
            Witness::AmpleClass {
                self_intersection, ..
            } => self_intersection == "1",
            Witness::AmpleClassPair { pairing, .. } => pairing == "1",
            Witness::Record(_) => false,
        }
    }
}

/// One applied rule in a proof trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// Stable machine-checkable rule identifier, e.g. `reider.even-lattice`.
    pub rule: String,
    /// Short statement of the criterion the rule transcribes.
    pub cite: String,
    /// Optional witness data.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl TraceStep {
    pub fn new(rule: &str, cite: &str) -> TraceStep {
        TraceStep {
            rule: rule.to_string(),
            cite: cite.to_string(),
            witness: None,
        }
    }

    pub fn with_witness(rule: &str, cite: &str, witness: Witness) -> TraceStep {
        TraceStep {
            rule: rule.to_string(),
            cite: cite.to_string(),
            witness: Some(witness),
        }
    }
}

/// Computed convex Fujita number (or interval) plus its proof trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FujitaVerdict {
    pub lower: u32,
    pub upper: u32,
    pub exact: bool,
    pub trace: Vec<TraceStep>,
    /// Hypotheses that were declared as input rather than verified; nonempty
    /// means the verdict is conditional on them.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conditional_on: Vec<String>,
}

impl FujitaVerdict {
    /// Exact verdict `lower = upper = value`.
    pub fn exact(value: u32, step: TraceStep) -> FujitaVerdict {
        FujitaVerdict {
            lower: value,
            upper: value,
            exact: true,
            trace: vec![step],
            conditional_on: Vec::new(),
        }
    }

    /// Interval verdict `lower ≤ FN ≤ upper`.
    pub fn interval(lower: u32, upper: u32, step: TraceStep) -> FujitaVerdict {
        FujitaVerdict {
            lower,
            upper,
            exact: lower == upper,
            trace: vec![step],
            conditional_on: Vec::new(),
        }
    }

    /// Appends a trace step in place.
    pub fn push_step(&mut self, step: TraceStep) {
        self.trace.push(step);
    }

    /// Marks a declared hypothesis the verdict depends on.
    pub fn push_condition(&mut self, hypothesis: &str) {
        self.conditional_on.push(hypothesis.to_string());
    }

    /// Intersects with another interval, recording the step. Returns `false`
    /// (leaving bounds untouched) when the intersection would be empty; the
    /// caller treats that as an internal contradiction.
    #[must_use]
    pub fn intersect(&mut self, lower: u32, upper: u32, step: TraceStep) -> bool {
        let lo = self.lower.max(lower);
        let hi = self.upper.min(upper);
        if lo > hi {
            return false;
        }
        self.lower = lo;
        self.upper = hi;
        self.exact = lo == hi;
        self.trace.push(step);
        true
    }

    /// The value as a rational when exact (used by table output).
    pub fn exact_value(&self) -> Option<u32> {
        self.exact.then_some(self.lower)
    }

    /// Renders `n` when exact and `[lo, hi]` otherwise.
    pub fn bounds_string(&self) -> String {
        if self.exact {
            self.lower.to_string()
        } else {
            format!("[{}, {}]", self.lower, self.upper)
        }
    }

    /// Structural invariants for surface verdicts:
    /// `0 ≤ lower ≤ upper ≤ 3`, `exact ⟺ lower = upper`, and an exact value
    /// of 3 must carry an extreme witness (ample `L² = 1` or an ample pair
    /// with `C₁·C₂ = 1`).
    pub fn check_surface_invariants(&self) -> Result<(), String> {
        if self.lower > self.upper {
            return Err(format!(
                "contradictory bounds: lower {} > upper {}",
                self.lower, self.upper
            ));
        }
        if self.upper > 3 {
            return Err(format!("upper bound {} exceeds 3", self.upper));
        }
        if self.exact != (self.lower == self.upper) {
            return Err("exact flag disagrees with bounds".to_string());
        }
        if self.exact && self.lower == 3 {
            let has_witness = self
                .trace
                .iter()
                .any(|s| s.witness.as_ref().is_some_and(Witness::certifies_extreme));
            if !has_witness {
                return Err("extreme verdict lacks a certifying witness".to_string());
            }
        }
        Ok(())
    }

    /// Lower bound as a rational (handy in exact-arithmetic tests).
    pub fn lower_rat(&self) -> Rat {
        rat(self.lower as i64)
    }
}

impl fmt::Display for FujitaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FN = {}", self.bounds_string())?;
        if !self.conditional_on.is_empty() {
            write!(f, " (conditional on: {})", self.conditional_on.join("; "))?;
        }
        Ok(())
    }
}
