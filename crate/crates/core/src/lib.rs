//! Convex Fujita numbers of minimal smooth projective surfaces.
//!
//! The convex Fujita number of a smooth projective variety `X` is the
//! minimal `m ≥ 0` such that `K_X + L₁ + … + L_s` is globally generated for
//! every `s ≥ m` and all ample divisors `Lᵢ`. On surfaces Reider's method
//! pins it into `[0, 3]`, and for minimal surfaces the Kodaira–Enriques
//! classification together with a handful of lattice-theoretic criteria
//! determines it in most families.
//!
//! This crate implements those criteria over exact rational arithmetic:
//!
//! * [`lattice`] — intersection lattices and divisor classes, the pairing,
//!   evenness/unimodularity/primitivity;
//! * [`rr`] — numerical Riemann–Roch, adjunction, and the `h⁰ = χ(𝒪) + ½L²`
//!   closed form on numerically-trivial-canonical surfaces;
//! * [`bundle`] — Harder–Narasimhan slopes, Butler's ampleness criterion on
//!   ℙ(E), and the complete Fujita-number decision tree for projective
//!   bundles on curves;
//! * [`catalog`] — constructors for the surface families (plane, Hirzebruch,
//!   ruled, abelian, bielliptic, K3, Enriques, elliptic fibrations, products,
//!   quotients, symmetric squares, pencil blow-ups), each carrying its
//!   lattice, canonical class, χ(𝒪) and family-specific ample oracles;
//! * [`engine`] — the classifier: Reider bounds, the unit-intersection
//!   extreme criterion, pseudosplit fibration lower bounds, and per-family
//!   dispatch producing a [`verdict::FujitaVerdict`] with a proof trace;
//! * [`oracle`] — independent brute-force enumerations that cross-check the
//!   closed forms on bounded instances;
//! * [`schema`] — the JSON surface-description format used by the CLI.
//!
//! All arithmetic is exact (arbitrary-precision rationals); there is no
//! floating point anywhere in the crate. Every value is immutable after
//! construction and every operation is pure, so everything is safe to share
//! across threads.

pub mod bundle;
pub mod catalog;
pub mod engine;
pub mod lattice;
pub mod oracle;
pub mod rational;
pub mod rr;
pub mod schema;
pub mod verdict;

pub use bundle::{
    adjoint_pushforward_min_slope, butler_is_ample, fujita_number_pe, slope_global_generation,
    HnBlock, PeLineClass, ProfileError, SlopeProfile,
};
pub use catalog::{
    enriques_component_count, enriques_fn, hirzebruch_is_ample, hirzebruch_is_nef,
    isotrivial_classes, k3_special_class_report, pencil_blowup_numbers, sym_square_numbers,
    AbelianData, AdeSymbol, BiellipticGroup, CatalogError, EllFibData, EnriquesData,
    GenusOneFibration, K3Data, SurfaceFamily, SurfaceModel,
};
pub use engine::{
    classify, ncd_extreme_check, pseudosplit_lower_bound, reider_upper_bound, EngineError,
    PseudosplitBound, PseudosplitFibration,
};
pub use lattice::{DivisorClass, IntersectionLattice, LatticeError};
pub use oracle::{
    critical_equation_solvable, critical_solution_within_box, critical_tuple_search,
    hirzebruch_adjoint_oracle, min_ample_selfint_search, CriticalTuples, OracleError, SearchBox,
};
pub use rational::{fmt_rat, parse_rat, rat, ratio, Rat};
pub use rr::{h0_ample_num_trivial_canonical, NumTrivialCanonicalFamily, RrError, SurfaceNumerics};
pub use schema::{parse_description_document, SchemaError, SurfaceDescription, SurfaceReport};
pub use verdict::{FujitaVerdict, TraceStep, Witness};
