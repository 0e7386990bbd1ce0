//! Constructors for the surface families whose convex Fujita numbers the
//! engine can decide.
//!
//! Each [`SurfaceModel`] bundles a family tag with its numerical shadow: the
//! Néron–Severi-style lattice actually used by the criteria, the canonical
//! class when it lives in that lattice, χ(𝒪), and family-specific declared
//! data (minimal ample self-intersection, fibration symbols, stability
//! flags, ...). Divisors are lattice classes plus flags — no curve geometry
//! is computed here, only the numbers the classification criteria consume.

mod bielliptic;
mod enriques;

pub use bielliptic::BiellipticGroup;
pub use enriques::{
    enriques_component_count, enriques_example_24, enriques_example_47, enriques_fn, AdeSymbol,
    EnriquesData, GenusOneFibration,
};

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::lattice::{DivisorClass, IntersectionLattice, LatticeError};
use crate::rational::{rat, ratio, Rat};
use crate::rr::SurfaceNumerics;

/// Errors from surface-model construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    /// A parameter violates a family constraint; the message names it.
    InvalidParameter(String),
    /// Enriques data must declare at least one genus-one fibration.
    EmptyFibrationList,
    Lattice(LatticeError),
}

impl CatalogError {
    pub(crate) fn invalid(msg: &str) -> CatalogError {
        CatalogError::InvalidParameter(msg.to_string())
    }
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::InvalidParameter(msg) => write!(f, "{msg}"),
            CatalogError::EmptyFibrationList => {
                write!(
                    f,
                    "an Enriques surface carries at least one genus-one fibration"
                )
            }
            CatalogError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CatalogError {}

impl From<LatticeError> for CatalogError {
    fn from(e: LatticeError) -> Self {
        CatalogError::Lattice(e)
    }
}

/// Declared data of an abelian surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianData {
    /// Minimal self-intersection of an ample class; declared, always even.
    pub min_ample_selfint: u32,
    /// Whether the surface is a product of elliptic curves.
    #[serde(default)]
    pub product_of_elliptic: bool,
    /// Order of the kernel of an isogeny from a principally polarized
    /// abelian surface with endomorphism ring ℤ, when one is declared.
    #[serde(default)]
    pub isogeny_from_ppav_order: Option<u64>,
}

impl AbelianData {
    pub fn new(
        min_ample_selfint: u32,
        product_of_elliptic: bool,
        isogeny_from_ppav_order: Option<u64>,
    ) -> Result<AbelianData, CatalogError> {
        if min_ample_selfint == 0 || !min_ample_selfint.is_multiple_of(2) {
            return Err(CatalogError::invalid(
                "min_ample_selfint must be a positive even integer (Riemann–Roch parity)",
            ));
        }
        if isogeny_from_ppav_order == Some(0) {
            return Err(CatalogError::invalid(
                "isogeny kernel order must be positive",
            ));
        }
        Ok(AbelianData {
            min_ample_selfint,
            product_of_elliptic,
            isogeny_from_ppav_order,
        })
    }

    /// A principally polarized abelian surface: ample class of square 2.
    pub fn principally_polarized() -> AbelianData {
        AbelianData {
            min_ample_selfint: 2,
            product_of_elliptic: false,
            isogeny_from_ppav_order: None,
        }
    }

    /// Product of two elliptic curves; the product polarization has square 2.
    pub fn product_of_elliptic_curves() -> AbelianData {
        AbelianData {
            min_ample_selfint: 2,
            product_of_elliptic: true,
            isogeny_from_ppav_order: None,
        }
    }
}

/// Declared data of a K3 surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct K3Data {
    /// Elliptic fibration with a section, all fibers irreducible and reduced.
    pub has_special_fibration: bool,
}

/// Declared data of a minimal elliptic fibration of Kodaira dimension 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllFibData {
    pub has_section: bool,
    pub all_fibers_irreducible_reduced: bool,
    pub chi_o_even: bool,
    /// Multiplicities of the multiple fibers, each ≥ 2.
    #[serde(default)]
    pub multiple_fibers: Vec<u32>,
    #[serde(default)]
    pub base_genus: u32,
}

impl EllFibData {
    pub fn new(
        has_section: bool,
        all_fibers_irreducible_reduced: bool,
        chi_o_even: bool,
        multiple_fibers: Vec<u32>,
        base_genus: u32,
    ) -> Result<EllFibData, CatalogError> {
        if has_section && !multiple_fibers.is_empty() {
            return Err(CatalogError::invalid(
                "an elliptic fibration with a section has no multiple fibers",
            ));
        }
        if multiple_fibers.iter().any(|&m| m < 2) {
            return Err(CatalogError::invalid("fiber multiplicities must be ≥ 2"));
        }
        Ok(EllFibData {
            has_section,
            all_fibers_irreducible_reduced,
            chi_o_even,
            multiple_fibers,
            base_genus,
        })
    }
}

/// The surface family, with its declared parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum SurfaceFamily {
    ProjectivePlane,
    Hirzebruch {
        n: u32,
    },
    /// Ruled surface ℙ(E) → C for a rank-2 bundle with the given slope data.
    RuledSurface {
        profile: crate::bundle::SlopeProfile,
    },
    Abelian(AbelianData),
    Bielliptic(BiellipticGroup),
    K3(K3Data),
    Enriques(EnriquesData),
    EllipticKd1(EllFibData),
    /// The isotrivial elliptic fibration `E × C / E[2]` with `C` of genus 2.
    IsotrivialExample,
    ProductOfCurves {
        g1: u32,
        g2: u32,
    },
    GodeauxQuotient,
    VeryGeneralHypersurface {
        degree: u32,
    },
    DoubleCoverPpav {
        picard_number_one: bool,
    },
    SymSquare {
        genus: u32,
    },
    PencilBlowup {
        d: u32,
    },
}

impl SurfaceFamily {
    /// Short display name.
    pub fn name(&self) -> String {
        match self {
            SurfaceFamily::ProjectivePlane => "projective plane".to_string(),
            SurfaceFamily::Hirzebruch { n } => format!("Hirzebruch surface (n = {n})"),
            SurfaceFamily::RuledSurface { profile } => {
                format!("ruled surface (degree {})", profile.degree())
            }
            SurfaceFamily::Abelian(_) => "abelian surface".to_string(),
            SurfaceFamily::Bielliptic(g) => format!("bielliptic surface ({})", g.label()),
            SurfaceFamily::K3(_) => "K3 surface".to_string(),
            SurfaceFamily::Enriques(_) => "Enriques surface".to_string(),
            SurfaceFamily::EllipticKd1(_) => "elliptic fibration (Kodaira dim 1)".to_string(),
            SurfaceFamily::IsotrivialExample => "isotrivial elliptic fibration".to_string(),
            SurfaceFamily::ProductOfCurves { g1, g2 } => {
                format!("product of curves (g = {g1}, {g2})")
            }
            SurfaceFamily::GodeauxQuotient => "Godeaux quintic quotient".to_string(),
            SurfaceFamily::VeryGeneralHypersurface { degree } => {
                format!("very general degree-{degree} hypersurface")
            }
            SurfaceFamily::DoubleCoverPpav { .. } => {
                "double cover of a principally polarized abelian surface".to_string()
            }
            SurfaceFamily::SymSquare { genus } => {
                format!("symmetric square of a genus-{genus} curve")
            }
            SurfaceFamily::PencilBlowup { d } => {
                format!("plane blown up in d²−1 pencil base points (d = {d})")
            }
        }
    }
}

/// A surface model: a family tag plus its numerical data.
#[derive(Debug, Clone)]
pub struct SurfaceModel {
    family: SurfaceFamily,
    numerics: SurfaceNumerics,
}

impl SurfaceModel {
    pub fn family(&self) -> &SurfaceFamily {
        &self.family
    }

    pub fn numerics(&self) -> &SurfaceNumerics {
        &self.numerics
    }

    pub fn lattice(&self) -> &Arc<IntersectionLattice> {
        self.numerics.lattice()
    }

    pub fn name(&self) -> String {
        self.family.name()
    }

    /// Whether the intersection pairing on the full Néron–Severi lattice is
    /// even.
    ///
    /// For every family but one the stored Gram matrix *is* the pairing on
    /// (the modeled part of) the Néron–Severi lattice and evenness is read
    /// off it; the modeled sublattices here are primitively embedded, so an
    /// odd stored diagonal certifies an odd `NS`. The isotrivial fibration
    /// stores a ℚ-basis instead, and its true lattice contains an integral
    /// class of self-intersection 1, so it is odd regardless of the stored
    /// Gram matrix.
    pub fn ns_pairing_even(&self) -> bool {
        match &self.family {
            SurfaceFamily::IsotrivialExample => false,
            // the section/fiber sublattice is real only when a section was
            // declared; without one its evenness certifies nothing
            SurfaceFamily::EllipticKd1(data) => data.has_section && self.lattice().is_even(),
            _ => self.lattice().is_even(),
        }
    }

    /// Whether the canonical class is numerically `2θ` for an integral `θ`.
    ///
    /// In the stored basis this means all canonical coordinates are even
    /// integers; families with numerically trivial canonical class qualify
    /// with `θ = 0`. Models that do not carry their canonical class answer
    /// `false` (for those in the catalog — the symmetric square — the value
    /// 3 of the Fujita number independently certifies non-divisibility).
    pub fn canonical_two_divisible(&self) -> bool {
        match &self.family {
            // without multiple fibers the canonical bundle formula makes ω a
            // pullback of degree 2g − 2 + χ, divisible by 2 exactly for even
            // χ; multiple fibers add fractional fiber parts (the isotrivial
            // example has the primitive class ½F), so nothing is certified
            SurfaceFamily::EllipticKd1(data) => data.multiple_fibers.is_empty() && data.chi_o_even,
            _ => match self.numerics.canonical() {
                Some(k) => k.scale(&ratio(1, 2)).is_integral(),
                None => false,
            },
        }
    }

    // ----- constructors ---------------------------------------------------

    /// The projective plane: lattice ℤ·H with `H² = 1`, `K = −3H`, χ(𝒪) = 1.
    pub fn projective_plane() -> SurfaceModel {
        let lat = IntersectionLattice::new(vec!["H"], vec![vec![1]]).expect("valid");
        let k = lat.class_i64(&[-3]).expect("rank 1");
        SurfaceModel {
            family: SurfaceFamily::ProjectivePlane,
            numerics: SurfaceNumerics::new(lat, Some(k), 1).expect("valid"),
        }
    }

    /// Hirzebruch surface: basis (S, F) with `S² = −n`, `S·F = 1`, `F² = 0`,
    /// `K = −2S − (n+2)F`, χ(𝒪) = 1.
    pub fn hirzebruch(n: u32) -> SurfaceModel {
        let ni = n as i64;
        let lat = IntersectionLattice::new(vec!["S", "F"], vec![vec![-ni, 1], vec![1, 0]])
            .expect("valid");
        let k = lat.class_i64(&[-2, -(ni + 2)]).expect("rank 2");
        SurfaceModel {
            family: SurfaceFamily::Hirzebruch { n },
            numerics: SurfaceNumerics::new(lat, Some(k), 1).expect("valid"),
        }
    }

    /// Ruled surface ℙ(E) → C for a rank-2 bundle of degree `d` on a curve of
    /// the profile's genus: basis (T, F) with `T² = d`, `T·F = 1`, `F² = 0`,
    /// `K = −2T + (2g − 2 + d)F`, χ(𝒪) = 1 − g.
    pub fn ruled_surface(
        profile: crate::bundle::SlopeProfile,
    ) -> Result<SurfaceModel, CatalogError> {
        if profile.rank() != 2 {
            return Err(CatalogError::invalid(
                "a ruled surface needs a rank-2 bundle profile",
            ));
        }
        let d = profile.degree();
        let g = profile.genus() as i64;
        let lat = IntersectionLattice::new(vec!["T", "F"], vec![vec![d, 1], vec![1, 0]])?;
        let k = lat.class_i64(&[-2, 2 * g - 2 + d])?;
        let numerics = SurfaceNumerics::new(lat, Some(k), 1 - g)?;
        Ok(SurfaceModel {
            family: SurfaceFamily::RuledSurface { profile },
            numerics,
        })
    }

    /// Abelian surface with declared ample data. Products of elliptic curves
    /// carry the hyperbolic fiber lattice; otherwise the model stores the
    /// rank-1 lattice spanned by a minimal ample class.
    pub fn abelian(data: AbelianData) -> Result<SurfaceModel, CatalogError> {
        let data = AbelianData::new(
            data.min_ample_selfint,
            data.product_of_elliptic,
            data.isogeny_from_ppav_order,
        )?;
        let lat = if data.product_of_elliptic {
            IntersectionLattice::new(vec!["f1", "f2"], vec![vec![0, 1], vec![1, 0]])?
        } else {
            IntersectionLattice::new(vec!["Θ"], vec![vec![data.min_ample_selfint as i64]])?
        };
        let k = lat.zero_class();
        let numerics = SurfaceNumerics::new(lat, Some(k), 0)?;
        Ok(SurfaceModel {
            family: SurfaceFamily::Abelian(data),
            numerics,
        })
    }

    /// Bielliptic surface of the given type; numerically trivial canonical
    /// class, χ(𝒪) = 0, hyperbolic-plane numerical lattice.
    pub fn bielliptic(group: BiellipticGroup) -> SurfaceModel {
        let lat =
            IntersectionLattice::new(vec!["A", "B"], vec![vec![0, 1], vec![1, 0]]).expect("valid");
        let k = lat.zero_class();
        SurfaceModel {
            family: SurfaceFamily::Bielliptic(group),
            numerics: SurfaceNumerics::new(lat, Some(k), 0).expect("valid"),
        }
    }

    /// K3 surface. With the special fibration the model stores the lattice
    /// ⟨E, S⟩, `E² = 0`, `E·S = 1`, `S² = −2`; without it a rank-1 even
    /// lattice (no isotropic class, hence no elliptic fibration).
    pub fn k3(data: K3Data) -> SurfaceModel {
        let lat = if data.has_special_fibration {
            IntersectionLattice::new(vec!["E", "S"], vec![vec![0, 1], vec![1, -2]]).expect("valid")
        } else {
            IntersectionLattice::new(vec!["L"], vec![vec![2]]).expect("valid")
        };
        let k = lat.zero_class();
        SurfaceModel {
            family: SurfaceFamily::K3(data),
            numerics: SurfaceNumerics::new(lat, Some(k), 2).expect("valid"),
        }
    }

    /// Fibration lattice ⟨E, S⟩ of a K3 surface with a section.
    pub fn k3_fibration_lattice() -> SurfaceModel {
        SurfaceModel::k3(K3Data {
            has_special_fibration: true,
        })
    }

    /// Enriques surface with declared fibration data; numerically trivial
    /// canonical class, χ(𝒪) = 1.
    pub fn enriques(data: EnriquesData) -> Result<SurfaceModel, CatalogError> {
        let data = EnriquesData::new(data.fibrations)?;
        let lat = IntersectionLattice::new(vec!["F", "B"], vec![vec![0, 1], vec![1, 0]])?;
        let k = lat.zero_class();
        let numerics = SurfaceNumerics::new(lat, Some(k), 1)?;
        Ok(SurfaceModel {
            family: SurfaceFamily::Enriques(data),
            numerics,
        })
    }

    /// Minimal elliptic fibration of Kodaira dimension 1. The stored lattice
    /// is the section/fiber sublattice ⟨S, F⟩ with `S² = −χ(𝒪)`, and
    /// `K = (2g − 2 + χ)·F`.
    pub fn elliptic_kd1(data: EllFibData) -> Result<SurfaceModel, CatalogError> {
        let data = EllFibData::new(
            data.has_section,
            data.all_fibers_irreducible_reduced,
            data.chi_o_even,
            data.multiple_fibers,
            data.base_genus,
        )?;
        let chi: i64 = if data.chi_o_even { 2 } else { 1 };
        let g = data.base_genus as i64;
        let lat = IntersectionLattice::new(vec!["S", "F"], vec![vec![-chi, 1], vec![1, 0]])?;
        // canonical bundle formula: K ≡ (2g − 2 + χ + Σ(1 − 1/m_P))·F,
        // a rational multiple of the general fiber once fibers are multiple
        let mut fiber_multiple = rat(2 * g - 2 + chi);
        for &m in &data.multiple_fibers {
            fiber_multiple += rat(1) - ratio(1, m as i64);
        }
        let k = lat.class(vec![rat(0), fiber_multiple])?;
        let numerics = SurfaceNumerics::new(lat, Some(k), chi)?;
        Ok(SurfaceModel {
            family: SurfaceFamily::EllipticKd1(data),
            numerics,
        })
    }

    /// The isotrivial elliptic fibration `E × C / E[2]`, `C` of genus 2:
    /// ℚ-basis (F, H) with `F² = H² = 0`, `F·H = 4`, canonical class `½F`,
    /// χ(𝒪) = 0. The distinguished ample class is `¼F + ½H`.
    pub fn isotrivial_example() -> SurfaceModel {
        let lat =
            IntersectionLattice::new(vec!["F", "H"], vec![vec![0, 4], vec![4, 0]]).expect("valid");
        let k = lat.class(vec![ratio(1, 2), rat(0)]).expect("rank 2");
        SurfaceModel {
            family: SurfaceFamily::IsotrivialExample,
            numerics: SurfaceNumerics::new(lat, Some(k), 0).expect("valid"),
        }
    }

    /// Product of smooth curves of the given genera: fiber basis (F1, F2),
    /// `K = (2g₁−2)F1 + (2g₂−2)F2`, χ(𝒪) = (1−g₁)(1−g₂).
    pub fn product_of_curves(g1: u32, g2: u32) -> SurfaceModel {
        let lat = IntersectionLattice::new(vec!["F1", "F2"], vec![vec![0, 1], vec![1, 0]])
            .expect("valid");
        let (g1i, g2i) = (g1 as i64, g2 as i64);
        let k = lat.class_i64(&[2 * g1i - 2, 2 * g2i - 2]).expect("rank 2");
        SurfaceModel {
            family: SurfaceFamily::ProductOfCurves { g1, g2 },
            numerics: SurfaceNumerics::new(lat, Some(k), (1 - g1i) * (1 - g2i)).expect("valid"),
        }
    }

    /// Quotient of a μ₅-invariant smooth quintic by the free μ₅-action:
    /// `K² = 1`, χ(𝒪) = 1, lattice spanned by the canonical class. The two
    /// witness divisors are distinct members of `|K + torsion|`, both
    /// numerically equal to `K`.
    pub fn godeaux_quotient() -> SurfaceModel {
        let lat = IntersectionLattice::new(vec!["K"], vec![vec![1]]).expect("valid");
        let k = lat.class_i64(&[1]).expect("rank 1");
        SurfaceModel {
            family: SurfaceFamily::GodeauxQuotient,
            numerics: SurfaceNumerics::new(lat, Some(k), 1).expect("valid"),
        }
    }

    /// Very general smooth surface of degree `d ≥ 5` in ℙ³: Picard group
    /// generated by the hyperplane class, `H² = d`, `K = (d−4)H`,
    /// χ(𝒪) = 1 + C(d−1, 3).
    pub fn very_general_hypersurface(degree: u32) -> Result<SurfaceModel, CatalogError> {
        if degree < 5 {
            return Err(CatalogError::invalid(
                "very general hypersurface model requires degree ≥ 5",
            ));
        }
        let d = degree as i64;
        let lat = IntersectionLattice::new(vec!["H"], vec![vec![d]])?;
        let k = lat.class_i64(&[d - 4])?;
        let chi = 1 + (d - 1) * (d - 2) * (d - 3) / 6;
        let numerics = SurfaceNumerics::new(lat, Some(k), chi)?;
        Ok(SurfaceModel {
            family: SurfaceFamily::VeryGeneralHypersurface { degree },
            numerics,
        })
    }

    /// Double cover of a principally polarized abelian surface with Picard
    /// number 1, branched along a general member of `|2Θ|`: `ω = f*Θ`,
    /// `(f*Θ)² = 4`, χ(𝒪) = 1. Whether the cover itself has Picard number 1
    /// is a declared, unverified hypothesis.
    pub fn double_cover_ppav(picard_number_one: bool) -> SurfaceModel {
        let lat = IntersectionLattice::new(vec!["T"], vec![vec![4]]).expect("valid");
        let k = lat.class_i64(&[1]).expect("rank 1");
        SurfaceModel {
            family: SurfaceFamily::DoubleCoverPpav { picard_number_one },
            numerics: SurfaceNumerics::new(lat, Some(k), 1).expect("valid"),
        }
    }

    /// Symmetric square of a genus-`g` curve. For `g ≥ 1` the model stores
    /// the basis (x, δ) with `x² = 1`, `x·δ = 1`, `δ² = 1 − g` and
    /// `K = (2g−2)x − δ`; for `g = 0` the square is ℙ² itself.
    pub fn sym_square(genus: u32) -> SurfaceModel {
        if genus == 0 {
            let lat = IntersectionLattice::new(vec!["H"], vec![vec![1]]).expect("valid");
            let k = lat.class_i64(&[-3]).expect("rank 1");
            return SurfaceModel {
                family: SurfaceFamily::SymSquare { genus },
                numerics: SurfaceNumerics::new(lat, Some(k), 1).expect("valid"),
            };
        }
        let g = genus as i64;
        let lat = IntersectionLattice::new(vec!["x", "δ"], vec![vec![1, 1], vec![1, 1 - g]])
            .expect("valid");
        let k = lat.class_i64(&[2 * g - 2, -1]).expect("rank 2");
        let chi = 1 - g + g * (g - 1) / 2;
        SurfaceModel {
            family: SurfaceFamily::SymSquare { genus },
            numerics: SurfaceNumerics::new(lat, Some(k), chi).expect("valid"),
        }
    }

    /// Blow-up of ℙ² in `d² − 1` of the `d²` base points of a general pencil
    /// of degree-`d` curves, `d ≥ 3`: basis (H, E₁, …, E_{d²−1}) with
    /// `H² = 1`, `Eⱼ² = −1`, `K = −3H + ΣEⱼ`.
    pub fn pencil_blowup(d: u32) -> Result<SurfaceModel, CatalogError> {
        if d < 3 {
            return Err(CatalogError::invalid(
                "the pencil construction needs degree d ≥ 3",
            ));
        }
        let points = (d * d - 1) as usize;
        let mut labels = vec!["H".to_string()];
        labels.extend((1..=points).map(|j| format!("E{j}")));
        let rank = points + 1;
        let mut gram = vec![vec![0i64; rank]; rank];
        gram[0][0] = 1;
        for (j, row) in gram.iter_mut().enumerate().skip(1) {
            row[j] = -1;
        }
        let lat = IntersectionLattice::new(labels, gram)?;
        let mut k_coords = vec![-3i64];
        k_coords.extend(std::iter::repeat_n(1, points));
        let k = lat.class_i64(&k_coords)?;
        let numerics = SurfaceNumerics::new(lat, Some(k), 1)?;
        Ok(SurfaceModel {
            family: SurfaceFamily::PencilBlowup { d },
            numerics,
        })
    }
}

// ----- family-specific closed-form oracles ---------------------------------

/// Nef test on a Hirzebruch surface: `aS + bF` is nef iff `a ≥ 0` and
/// `b ≥ na`. On a toric surface nef and globally generated coincide.
pub fn hirzebruch_is_nef(n: u32, a: i64, b: i64) -> bool {
    a >= 0 && b >= n as i64 * a
}

/// Ample test on a Hirzebruch surface: `aS + bF` is ample iff `a > 0` and
/// `b > na`.
pub fn hirzebruch_is_ample(n: u32, a: i64, b: i64) -> bool {
    a > 0 && b > n as i64 * a
}

/// Intersection report of the class `L = mE + S` on the K3 fibration
/// lattice, with the Nakai–Moishezon ampleness verdict read from the three
/// inequalities `L² > 0`, `L·E > 0`, `L·S > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K3SpecialClassReport {
    pub m: i64,
    pub l_sq: Rat,
    pub l_dot_fiber: Rat,
    pub l_dot_section: Rat,
    pub ample: bool,
}

/// Computes the report for `L = mE + S`: `(L², L·E, L·S) = (2m−2, 1, m−2)`,
/// ample iff `m ≥ 3`. The numbers are produced by the actual lattice pairing.
pub fn k3_special_class_report(m: i64) -> K3SpecialClassReport {
    let model = SurfaceModel::k3_fibration_lattice();
    let lat = model.lattice();
    let fiber = lat.basis_class(0);
    let section = lat.basis_class(1);
    let l = lat.class_i64(&[m, 1]).expect("rank 2");
    let l_sq = l.self_intersection();
    let l_dot_fiber = l.pair(&fiber).expect("same lattice");
    let l_dot_section = l.pair(&section).expect("same lattice");
    let ample = l_sq > rat(0) && l_dot_fiber > rat(0) && l_dot_section > rat(0);
    K3SpecialClassReport {
        m,
        l_sq,
        l_dot_fiber,
        l_dot_section,
        ample,
    }
}

/// Distinguished classes of the isotrivial fibration model.
#[derive(Debug, Clone)]
pub struct IsotrivialClasses {
    /// The elliptic fiber class `F`.
    pub fiber: DivisorClass,
    /// The horizontal fiber class `H` (a copy of the genus-2 curve).
    pub horizontal: DivisorClass,
    /// The canonical class `½F`.
    pub canonical: DivisorClass,
    /// The ample generator `L = ¼F + ½H` with `K·L = L² = 1`.
    pub ample_generator: DivisorClass,
    /// `h⁰(𝒪(F))`: sections pulled back from `𝒪(1)` on the base ℙ¹.
    pub h0_fiber: u32,
    /// `h⁰(𝒪(F + H))`: computed through the quotient, `deg(S) + 1 − g = 3`.
    pub h0_fiber_plus_horizontal: u32,
    /// Degree of the reduced intersection scheme `F ∩ H` ( = F·H).
    pub base_scheme_degree: u32,
}

/// The distinguished classes and section counts of the isotrivial example.
pub fn isotrivial_classes(model: &SurfaceModel) -> Result<IsotrivialClasses, CatalogError> {
    if !matches!(model.family(), SurfaceFamily::IsotrivialExample) {
        return Err(CatalogError::invalid(
            "isotrivial classes exist only on the isotrivial fibration model",
        ));
    }
    let lat = model.lattice();
    let fiber = lat.basis_class(0);
    let horizontal = lat.basis_class(1);
    let canonical = model
        .numerics()
        .canonical()
        .expect("isotrivial model carries its canonical class")
        .clone();
    let ample_generator = lat.class(vec![ratio(1, 4), ratio(1, 2)])?;
    Ok(IsotrivialClasses {
        fiber,
        horizontal,
        canonical,
        ample_generator,
        h0_fiber: 2,
        h0_fiber_plus_horizontal: 3,
        base_scheme_degree: 4,
    })
}

/// Numbers of the pencil blow-up construction in degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilBlowupNumbers {
    /// Self-intersection of the strict transform `C = dH − ΣEⱼ`.
    pub c_sq: Rat,
    pub c_dot_h: Rat,
    /// `C·Eⱼ`, the same for every exceptional curve.
    pub c_dot_e: Rat,
    pub num_blown_points: u32,
}

/// Intersection numbers of the strict transform of a pencil member on the
/// blow-up, computed through the lattice: `C² = d² − (d²−1) = 1`.
pub fn pencil_blowup_numbers(d: u32) -> Result<PencilBlowupNumbers, CatalogError> {
    let model = SurfaceModel::pencil_blowup(d)?;
    let lat = model.lattice();
    let points = (d * d - 1) as usize;
    let mut coords = vec![d as i64];
    coords.extend(std::iter::repeat_n(-1, points));
    let c = lat.class_i64(&coords)?;
    let h = lat.basis_class(0);
    let e1 = lat.basis_class(1);
    Ok(PencilBlowupNumbers {
        c_sq: c.self_intersection(),
        c_dot_h: c.pair(&h).expect("same lattice"),
        c_dot_e: c.pair(&e1).expect("same lattice"),
        num_blown_points: points as u32,
    })
}

/// Numbers of the symmetric-square construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymSquareNumbers {
    /// `H_P · H_Q` on `C × C` for distinct points `P ≠ Q`.
    pub hp_dot_hq_on_product: Rat,
    /// `D_P · D_Q = (H_P·H_Q)/deg(π) = 1` on the symmetric square.
    pub dp_dot_dq: Rat,
}

/// `D_P·D_Q = 1` for the ample divisors `D_P` on `Sym²C`, via the degree-2
/// quotient from `C × C` where `H_P = pr₁⁻¹P + pr₂⁻¹P` and
/// `H_P·H_Q = 2` (two transverse fiber crossings).
pub fn sym_square_numbers(_genus: u32) -> SymSquareNumbers {
    let product =
        IntersectionLattice::new(vec!["f1", "f2"], vec![vec![0, 1], vec![1, 0]]).expect("valid");
    let h_p = product.class_i64(&[1, 1]).expect("rank 2");
    let h_q = product.class_i64(&[1, 1]).expect("rank 2");
    let hp_dot_hq = h_p.pair(&h_q).expect("same lattice");
    let dp_dot_dq = &hp_dot_hq / rat(2);
    SymSquareNumbers {
        hp_dot_hq_on_product: hp_dot_hq,
        dp_dot_dq,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn hirzebruch_models() {
        let p1xp1 = SurfaceModel::hirzebruch(0);
        assert_eq!(
            p1xp1.lattice().gram_rows_i64(),
            vec![vec![0, 1], vec![1, 0]]
        );

        let h2 = SurfaceModel::hirzebruch(2);
        let k = h2.numerics().canonical().unwrap();
        assert_eq!(k.coord_strings(), vec!["-2", "-4"]);

        let h1 = SurfaceModel::hirzebruch(1);
        let k = h1.numerics().canonical().unwrap();
        assert_eq!(k.self_intersection(), rat(8));
    }

    #[test]
    fn evenness_per_instance() {
        // Hirzebruch evenness depends on n, not on the family
        for n in 0..=6u32 {
            assert_eq!(SurfaceModel::hirzebruch(n).lattice().is_even(), n % 2 == 0);
        }
        assert!(!SurfaceModel::projective_plane().lattice().is_even());
        assert!(SurfaceModel::abelian(AbelianData::principally_polarized())
            .unwrap()
            .lattice()
            .is_even());
        assert!(SurfaceModel::k3_fibration_lattice().lattice().is_even());
        assert!(SurfaceModel::product_of_curves(2, 3).lattice().is_even());
        assert!(!SurfaceModel::sym_square(2).lattice().is_even());
        assert!(!SurfaceModel::pencil_blowup(3).unwrap().lattice().is_even());
    }

    #[test]
    fn hirzebruch_cone_tests() {
        assert!(hirzebruch_is_ample(3, 1, 4));
        assert!(hirzebruch_is_nef(3, 1, 3) && !hirzebruch_is_ample(3, 1, 3));
        assert!(hirzebruch_is_nef(2, 0, 1) && !hirzebruch_is_ample(2, 0, 1));
        // n = 0: both rulings positive
        assert!(hirzebruch_is_ample(0, 1, 1));
        assert!(!hirzebruch_is_ample(0, 0, 1));
        assert!(hirzebruch_is_nef(0, 0, 1));
        assert!(!hirzebruch_is_nef(0, -1, 1));
    }

    #[test]
    fn k3_special_class_reports() {
        let r3 = k3_special_class_report(3);
        assert_eq!(
            (r3.l_sq, r3.l_dot_fiber, r3.l_dot_section),
            (rat(4), rat(1), rat(1))
        );
        assert!(r3.ample);

        let r2 = k3_special_class_report(2);
        assert_eq!(
            (r2.l_sq, r2.l_dot_fiber, r2.l_dot_section),
            (rat(2), rat(1), rat(0))
        );
        assert!(!r2.ample);

        let r10 = k3_special_class_report(10);
        assert_eq!(
            (r10.l_sq, r10.l_dot_fiber, r10.l_dot_section),
            (rat(18), rat(1), rat(8))
        );
        assert!(r10.ample);

        for m in -10..=10 {
            assert_eq!(k3_special_class_report(m).ample, m >= 3, "m = {m}");
        }
    }

    #[test]
    fn isotrivial_model_pins() {
        let model = SurfaceModel::isotrivial_example();
        let cls = isotrivial_classes(&model).unwrap();
        assert_eq!(cls.canonical.pair(&cls.ample_generator).unwrap(), rat(1));
        assert_eq!(cls.ample_generator.self_intersection(), rat(1));
        assert_eq!(cls.fiber.pair(&cls.horizontal).unwrap(), rat(4));
        assert_eq!(cls.h0_fiber, 2);
        assert_eq!(cls.h0_fiber_plus_horizontal, 3);
        assert_eq!(
            rat(cls.base_scheme_degree as i64),
            cls.fiber.pair(&cls.horizontal).unwrap()
        );
        // the canonical class is primitive in the (ω, L) integral structure,
        // and the stored ℚ-basis Gram has determinant −16
        assert_eq!(model.lattice().determinant(), num::BigInt::from(-16));
        assert!(!model.ns_pairing_even());
        assert!(!model.canonical_two_divisible());
    }

    #[test]
    fn pencil_blowup_pins() {
        let n3 = pencil_blowup_numbers(3).unwrap();
        assert_eq!(n3.c_sq, rat(1));
        assert_eq!(n3.num_blown_points, 8);
        let n5 = pencil_blowup_numbers(5).unwrap();
        assert_eq!(n5.c_sq, rat(1));
        let n4 = pencil_blowup_numbers(4).unwrap();
        assert_eq!(n4.num_blown_points, 15);
        assert_eq!(n4.c_dot_h, rat(4));
        assert_eq!(n4.c_dot_e, rat(1));
        assert!(pencil_blowup_numbers(2).is_err());
    }

    #[test]
    fn sym_square_pins() {
        for g in [0, 1, 2, 5] {
            let n = sym_square_numbers(g);
            assert_eq!(n.hp_dot_hq_on_product, rat(2));
            assert_eq!(n.dp_dot_dq, rat(1));
        }
    }

    #[test]
    fn sym_square_model_consistency() {
        // genus 0 is the plane
        let p = SurfaceModel::sym_square(0);
        assert_eq!(p.lattice().rank(), 1);
        assert_eq!(
            p.numerics().canonical().unwrap().coord_strings(),
            vec!["-3"]
        );

        // genus ≥ 1: the class x has genus g by adjunction, and Noether's
        // formula holds with e = (e(C)² + e(C))/... pinned via χ
        for g in 1..=4u32 {
            let m = SurfaceModel::sym_square(g);
            let x = m.lattice().basis_class(0);
            let genus_of_x = m.numerics().adjunction_genus(&x).unwrap();
            assert_eq!(genus_of_x, rat(g as i64));
        }
    }

    #[test]
    fn abelian_validation() {
        assert!(AbelianData::new(3, false, None).is_err());
        assert!(AbelianData::new(0, false, None).is_err());
        let m = SurfaceModel::abelian(AbelianData::principally_polarized()).unwrap();
        assert!(m.ns_pairing_even());
        let p = SurfaceModel::abelian(AbelianData::product_of_elliptic_curves()).unwrap();
        assert_eq!(p.lattice().rank(), 2);
    }

    #[test]
    fn elliptic_kd1_validation() {
        assert!(EllFibData::new(true, true, true, vec![2], 2).is_err());
        assert!(EllFibData::new(false, true, true, vec![1], 2).is_err());
        let data = EllFibData::new(true, true, true, vec![], 2).unwrap();
        let m = SurfaceModel::elliptic_kd1(data).unwrap();
        assert!(m.canonical_two_divisible());
        let odd = EllFibData::new(true, true, false, vec![], 2).unwrap();
        let m = SurfaceModel::elliptic_kd1(odd).unwrap();
        assert!(!m.canonical_two_divisible());
    }

    #[test]
    fn two_divisible_canonicals() {
        assert!(!SurfaceModel::projective_plane().canonical_two_divisible());
        assert!(SurfaceModel::hirzebruch(2).canonical_two_divisible());
        assert!(!SurfaceModel::hirzebruch(3).canonical_two_divisible());
        assert!(SurfaceModel::product_of_curves(2, 3).canonical_two_divisible());
        assert!(!SurfaceModel::godeaux_quotient().canonical_two_divisible());
        assert!(SurfaceModel::k3_fibration_lattice().canonical_two_divisible());
        assert!(!SurfaceModel::very_general_hypersurface(5)
            .unwrap()
            .canonical_two_divisible());
        assert!(SurfaceModel::very_general_hypersurface(6)
            .unwrap()
            .canonical_two_divisible());
    }

    #[test]
    fn vgh_chi() {
        // χ(𝒪) = 1 + C(d−1, 3): K3-like check d = 5 → 5, d = 6 → 11
        assert_eq!(
            SurfaceModel::very_general_hypersurface(5)
                .unwrap()
                .numerics()
                .chi_o(),
            5
        );
        assert_eq!(
            SurfaceModel::very_general_hypersurface(6)
                .unwrap()
                .numerics()
                .chi_o(),
            11
        );
        assert!(SurfaceModel::very_general_hypersurface(4).is_err());
    }

    #[test]
    fn ruled_surface_model() {
        let profile = crate::bundle::SlopeProfile::stable(2, 1, false, 2).unwrap();
        let m = SurfaceModel::ruled_surface(profile).unwrap();
        // K² = 8(1 − g) = −8 for genus 2
        let k = m.numerics().canonical().unwrap();
        assert_eq!(k.self_intersection(), rat(-8));
        assert!(!m.canonical_two_divisible()); // odd degree

        let r3 = crate::bundle::SlopeProfile::stable(3, 1, false, 2).unwrap();
        assert!(SurfaceModel::ruled_surface(r3).is_err());
    }
}
