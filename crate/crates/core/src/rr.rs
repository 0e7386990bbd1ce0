//! Riemann–Roch and adjunction on surfaces, in their purely numerical form.
//!
//! For a line bundle class `L` on a surface with canonical class `K` and
//! holomorphic Euler characteristic `χ(𝒪)`,
//!
//! ```text
//! χ(L) = χ(𝒪) + ½ · L·(L − K)
//! ```
//!
//! and the arithmetic genus of a curve class `C` is `1 + ½·C·(C + K)`.
//! On the four minimal families with numerically trivial canonical class
//! (abelian, bielliptic, K3, Enriques) Kodaira vanishing upgrades `χ(L)` of
//! an ample `L` to `h⁰(L) = χ(𝒪) + ½L²`; that closed form is exposed here
//! and nowhere generalized.

use std::fmt;
use std::sync::Arc;

use crate::lattice::{DivisorClass, IntersectionLattice, LatticeError};
use crate::rational::{rat, ratio, Rat};

/// Errors from the numerical Riemann–Roch formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RrError {
    /// Underlying lattice arithmetic failed (mismatch, non-integrality, ...).
    Lattice(LatticeError),
    /// The closed-form h⁰ requires positive self-intersection.
    NonPositiveSelfIntersection,
    /// The model does not carry its canonical class in the stored lattice.
    CanonicalNotModeled,
}

impl fmt::Display for RrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RrError::Lattice(e) => write!(f, "{e}"),
            RrError::NonPositiveSelfIntersection => {
                write!(f, "ample closed form requires L² > 0")
            }
            RrError::CanonicalNotModeled => {
                write!(f, "canonical class is not modeled in the stored lattice")
            }
        }
    }
}

impl std::error::Error for RrError {}

impl From<LatticeError> for RrError {
    fn from(e: LatticeError) -> Self {
        RrError::Lattice(e)
    }
}

/// Numerical data of a surface: its lattice, canonical class, and χ(𝒪).
///
/// `canonical` is `None` for models whose stored sublattice does not contain
/// the canonical class; the Riemann–Roch formulas then refuse to run rather
/// than guess.
#[derive(Debug, Clone)]
pub struct SurfaceNumerics {
    lattice: Arc<IntersectionLattice>,
    canonical: Option<DivisorClass>,
    chi_o: i64,
}

impl SurfaceNumerics {
    /// Bundles a lattice, an optional canonical class, and χ(𝒪).
    pub fn new(
        lattice: Arc<IntersectionLattice>,
        canonical: Option<DivisorClass>,
        chi_o: i64,
    ) -> Result<Self, LatticeError> {
        if let Some(k) = &canonical {
            if k.lattice() != &lattice && **k.lattice() != *lattice {
                return Err(LatticeError::LatticeMismatch);
            }
        }
        Ok(SurfaceNumerics {
            lattice,
            canonical,
            chi_o,
        })
    }

    pub fn lattice(&self) -> &Arc<IntersectionLattice> {
        &self.lattice
    }

    /// Canonical class, if modeled in the stored lattice.
    pub fn canonical(&self) -> Option<&DivisorClass> {
        self.canonical.as_ref()
    }

    /// Holomorphic Euler characteristic χ(𝒪).
    pub fn chi_o(&self) -> i64 {
        self.chi_o
    }

    /// Euler characteristic `χ(L) = χ(𝒪) + ½·L·(L − K)` of a class.
    ///
    /// The result is an exact rational; callers assert integrality where the
    /// geometry guarantees it.
    pub fn chi_of_class(&self, l: &DivisorClass) -> Result<Rat, RrError> {
        let k = self
            .canonical
            .as_ref()
            .ok_or(RrError::CanonicalNotModeled)?;
        let l_minus_k = l.sub(k)?;
        Ok(rat(self.chi_o) + ratio(1, 2) * l.pair(&l_minus_k)?)
    }

    /// Arithmetic genus `1 + ½·C·(C + K)` of an integral curve class.
    pub fn adjunction_genus(&self, c: &DivisorClass) -> Result<Rat, RrError> {
        if !c.is_integral() {
            return Err(RrError::Lattice(LatticeError::NotIntegral));
        }
        let k = self
            .canonical
            .as_ref()
            .ok_or(RrError::CanonicalNotModeled)?;
        let c_plus_k = c.add(k)?;
        Ok(rat(1) + ratio(1, 2) * c.pair(&c_plus_k)?)
    }
}

/// The four minimal families with numerically trivial canonical class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumTrivialCanonicalFamily {
    Abelian,
    Bielliptic,
    K3,
    Enriques,
}

impl NumTrivialCanonicalFamily {
    /// χ(𝒪) of the family (abelian and bielliptic 0, K3 2, Enriques 1).
    pub fn chi_o(self) -> i64 {
        match self {
            NumTrivialCanonicalFamily::Abelian | NumTrivialCanonicalFamily::Bielliptic => 0,
            NumTrivialCanonicalFamily::K3 => 2,
            NumTrivialCanonicalFamily::Enriques => 1,
        }
    }
}

/// `h⁰(L) = χ(𝒪) + ½L²` for an ample `L` on a surface with numerically
/// trivial canonical class (Kodaira vanishing kills the higher cohomology).
///
/// Errors unless `L² > 0`.
pub fn h0_ample_num_trivial_canonical(
    family: NumTrivialCanonicalFamily,
    l_sq: &Rat,
) -> Result<Rat, RrError> {
    if *l_sq <= rat(0) {
        return Err(RrError::NonPositiveSelfIntersection);
    }
    Ok(rat(family.chi_o()) + ratio(1, 2) * l_sq)
}
