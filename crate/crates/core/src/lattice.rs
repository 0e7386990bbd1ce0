//! Exact arithmetic on Néron–Severi-style intersection lattices.
//!
//! An [`IntersectionLattice`] is a labelled basis together with a symmetric
//! integer Gram matrix; a [`DivisorClass`] is a vector of exact rationals in
//! that basis. The pairing, evenness, unimodularity and primitivity
//! predicates below are the whole arithmetic substrate of the crate: every
//! self-intersection, canonical degree, and ampleness inequality elsewhere
//! reduces to [`DivisorClass::pair`].
//!
//! Rational (non-integral) coordinates are permitted on purpose: several
//! surface models manipulate ℚ-classes such as ½F or ¼F + ½H. Predicates
//! that only make sense for integral classes say so and reject other input.

use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::rational::{fmt_rat, is_integer, Rat};

/// Errors from lattice arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// Gram matrix is not square, or rank disagrees with the label count.
    DimensionMismatch { expected: usize, got: usize },
    /// Gram matrix is not symmetric.
    NonSymmetricGram,
    /// Two classes from different lattices were paired.
    LatticeMismatch,
    /// An operation required a nonzero class.
    ZeroClass,
    /// An operation required an integral class.
    NotIntegral,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            LatticeError::NonSymmetricGram => write!(f, "Gram matrix is not symmetric"),
            LatticeError::LatticeMismatch => write!(f, "classes belong to different lattices"),
            LatticeError::ZeroClass => write!(f, "operation requires a nonzero class"),
            LatticeError::NotIntegral => write!(f, "operation requires an integral class"),
        }
    }
}

impl std::error::Error for LatticeError {}

/// A basis with labels and a symmetric integer Gram matrix.
///
/// Immutable after construction. Classes keep an `Arc` to their lattice, so
/// pairing classes from structurally different lattices is detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionLattice {
    basis_labels: Vec<String>,
    gram: Vec<Vec<BigInt>>,
}

impl IntersectionLattice {
    /// Builds a lattice from basis labels and an integer Gram matrix.
    pub fn new<S: Into<String>>(
        labels: Vec<S>,
        gram_rows: Vec<Vec<i64>>,
    ) -> Result<Arc<Self>, LatticeError> {
        let rank = labels.len();
        if gram_rows.len() != rank {
            return Err(LatticeError::DimensionMismatch {
                expected: rank,
                got: gram_rows.len(),
            });
        }
        let mut gram = Vec::with_capacity(rank);
        for row in &gram_rows {
            if row.len() != rank {
                return Err(LatticeError::DimensionMismatch {
                    expected: rank,
                    got: row.len(),
                });
            }
            gram.push(row.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        }
        for (i, row) in gram.iter().enumerate() {
            for (j, entry) in row.iter().enumerate().take(i) {
                if *entry != gram[j][i] {
                    return Err(LatticeError::NonSymmetricGram);
                }
            }
        }
        Ok(Arc::new(IntersectionLattice {
            basis_labels: labels.into_iter().map(Into::into).collect(),
            gram,
        }))
    }

    /// Rank of the lattice ( = number of basis labels = Gram dimension).
    pub fn rank(&self) -> usize {
        self.basis_labels.len()
    }

    /// Basis labels in order.
    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    /// Gram entry `(i, j)`.
    pub fn gram_entry(&self, i: usize, j: usize) -> &BigInt {
        &self.gram[i][j]
    }

    /// Gram matrix rows as `i64` (for serialization; entries here are small).
    pub fn gram_rows_i64(&self) -> Vec<Vec<i64>> {
        self.gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| i64::try_from(x).expect("Gram entry exceeds i64"))
                    .collect()
            })
            .collect()
    }

    /// True iff every diagonal Gram entry is even, equivalently `v·v` is even
    /// for every integral `v`.
    pub fn is_even(&self) -> bool {
        let two = BigInt::from(2);
        (0..self.rank()).all(|i| (&self.gram[i][i] % &two).is_zero())
    }

    /// True iff `|det(gram)| = 1`, computed exactly.
    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    /// Exact determinant of the Gram matrix (Bareiss fraction-free elimination).
    pub fn determinant(&self) -> BigInt {
        let n = self.rank();
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.gram.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    /// The zero class in this lattice.
    pub fn zero_class(self: &Arc<Self>) -> DivisorClass {
        DivisorClass {
            lattice: Arc::clone(self),
            coords: vec![Rat::zero(); self.rank()],
        }
    }

    /// A class from rational coordinates.
    pub fn class(self: &Arc<Self>, coords: Vec<Rat>) -> Result<DivisorClass, LatticeError> {
        if coords.len() != self.rank() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        Ok(DivisorClass {
            lattice: Arc::clone(self),
            coords,
        })
    }

    /// A class from integer coordinates.
    pub fn class_i64(self: &Arc<Self>, coords: &[i64]) -> Result<DivisorClass, LatticeError> {
        self.class(
            coords
                .iter()
                .map(|&c| Rat::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// The `i`-th basis class.
    pub fn basis_class(self: &Arc<Self>, i: usize) -> DivisorClass {
        let mut coords = vec![Rat::zero(); self.rank()];
        coords[i] = Rat::one();
        DivisorClass {
            lattice: Arc::clone(self),
            coords,
        }
    }
}

/// A divisor class: exact rational coordinates in a fixed lattice basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    lattice: Arc<IntersectionLattice>,
    coords: Vec<Rat>,
}

impl DivisorClass {
    /// The lattice this class lives in.
    pub fn lattice(&self) -> &Arc<IntersectionLattice> {
        &self.lattice
    }

    /// Coordinates in the lattice basis.
    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// True iff all coordinates vanish.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    /// True iff all coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(is_integer)
    }

    fn same_lattice(&self, other: &DivisorClass) -> bool {
        Arc::ptr_eq(&self.lattice, &other.lattice) || self.lattice == other.lattice
    }

    /// Intersection number `self · other = selfᵀ · Gram · other`.
    ///
    /// Symmetric and bilinear; errors if the classes live in different
    /// lattices.
    pub fn pair(&self, other: &DivisorClass) -> Result<Rat, LatticeError> {
        if !self.same_lattice(other) {
            return Err(LatticeError::LatticeMismatch);
        }
        let n = self.lattice.rank();
        let mut acc = Rat::zero();
        for i in 0..n {
            if self.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if other.coords[j].is_zero() {
                    continue;
                }
                let g = Rat::from_integer(self.lattice.gram[i][j].clone());
                acc += &self.coords[i] * &other.coords[j] * g;
            }
        }
        Ok(acc)
    }

    /// Self-intersection `self · self`.
    pub fn self_intersection(&self) -> Rat {
        self.pair(self).expect("a class always pairs with itself")
    }

    /// True iff the gcd of the (integral, not all zero) coordinates is 1.
    pub fn is_primitive(&self) -> Result<bool, LatticeError> {
        if !self.is_integral() {
            return Err(LatticeError::NotIntegral);
        }
        if self.is_zero() {
            return Err(LatticeError::ZeroClass);
        }
        let mut g = BigInt::zero();
        for c in &self.coords {
            g = g.gcd(c.numer());
        }
        Ok(g.is_one())
    }

    /// Sum of two classes of the same lattice.
    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass, LatticeError> {
        if !self.same_lattice(other) {
            return Err(LatticeError::LatticeMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(DivisorClass {
            lattice: Arc::clone(&self.lattice),
            coords,
        })
    }

    /// Difference of two classes of the same lattice.
    pub fn sub(&self, other: &DivisorClass) -> Result<DivisorClass, LatticeError> {
        if !self.same_lattice(other) {
            return Err(LatticeError::LatticeMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(DivisorClass {
            lattice: Arc::clone(&self.lattice),
            coords,
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rat) -> DivisorClass {
        DivisorClass {
            lattice: Arc::clone(&self.lattice),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Coordinates rendered with [`fmt_rat`].
    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(fmt_rat).collect()
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, label) in self.coords.iter().zip(self.lattice.basis_labels()) {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{}·{label}", fmt_rat(&a))?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
