//! Independent enumeration oracles.
//!
//! These functions re-derive, by exhaustive search over bounded boxes, facts
//! that the rest of the crate obtains from closed forms: nef-ness of adjoint
//! bundles on Hirzebruch surfaces, the critical adjoint tuples on ℙ(E), and
//! minimal ample self-intersections. Enumeration is exhaustive within its
//! box, never sampled; an empty result at a small box is evidence, not
//! proof, so tests pair the searches with the exact Diophantine criteria.
//!
//! The searches go through the lattice pairing rather than the closed-form
//! inequalities, so agreement between the two routes is a real check.

use std::fmt;

use crate::bundle::{adjoint_pushforward_min_slope, butler_is_ample, PeLineClass, SlopeProfile};
use crate::catalog::{SurfaceFamily, SurfaceModel};
use crate::lattice::DivisorClass;
use crate::rational::{rat, Rat};

/// Errors from oracle runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The model's family has no closed-form ample membership oracle.
    NoAmpleOracle { family: String },
    /// Critical-tuple search requires a semistable profile.
    NotSemistable,
    /// Search boxes must have positive bound.
    EmptyBox,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NoAmpleOracle { family } => {
                write!(f, "no closed-form ample oracle for family: {family}")
            }
            OracleError::NotSemistable => {
                write!(f, "critical-tuple search requires a semistable profile")
            }
            OracleError::EmptyBox => write!(f, "search box bound must be ≥ 1"),
        }
    }
}

impl std::error::Error for OracleError {}

/// Bounded coordinate box for enumeration, coordinates in `[−B, B]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBox {
    coord_bound: i64,
}

impl SearchBox {
    /// Default bound keeping all CI enumerations well under a minute.
    pub const DEFAULT_BOUND: i64 = 6;

    pub fn new(coord_bound: i64) -> Result<SearchBox, OracleError> {
        if coord_bound < 1 {
            return Err(OracleError::EmptyBox);
        }
        Ok(SearchBox { coord_bound })
    }

    pub fn bound(&self) -> i64 {
        self.coord_bound
    }
}

impl Default for SearchBox {
    fn default() -> Self {
        SearchBox {
            coord_bound: Self::DEFAULT_BOUND,
        }
    }
}

// ----- Hirzebruch adjoint oracle --------------------------------------------

/// Nef test on a Hirzebruch model through the lattice pairing: a class is
/// nef iff it meets the two Mori cone generators (the negative section `S`
/// and the fiber `F`) non-negatively.
fn hirzebruch_nef_by_pairing(model: &SurfaceModel, class: &DivisorClass) -> bool {
    let s = model.lattice().basis_class(0);
    let f = model.lattice().basis_class(1);
    class.pair(&s).expect("same lattice") >= rat(0)
        && class.pair(&f).expect("same lattice") >= rat(0)
}

/// Ample classes `aS + bF` of the degree-`n` Hirzebruch surface inside the
/// box, parametrized along the ample cone: `a ∈ [1, B]`, `b − na ∈ [1, B]`.
/// This keeps the witness family `S + (n+1)F` inside every box.
pub fn hirzebruch_ample_box(n: u32, search: SearchBox) -> Vec<(i64, i64)> {
    let b_bound = search.bound();
    let mut out = Vec::new();
    for a in 1..=b_bound {
        for excess in 1..=b_bound {
            out.push((a, n as i64 * a + excess));
        }
    }
    out
}

/// Exhaustively checks, over all `s`-tuples of ample classes in the box,
/// whether `K + ΣLᵢ` is nef ( = globally generated on a toric surface).
/// Returns `true` when every tuple passes; [`hirzebruch_adjoint_counterexample`]
/// reports a failing tuple when one exists.
pub fn hirzebruch_adjoint_oracle(n: u32, s: u32, search: SearchBox) -> bool {
    hirzebruch_adjoint_counterexample(n, s, search).is_none()
}

/// First (lexicographic) `s`-tuple of ample classes in the box whose adjoint
/// bundle is not nef, or `None` when no tuple fails.
pub fn hirzebruch_adjoint_counterexample(
    n: u32,
    s: u32,
    search: SearchBox,
) -> Option<Vec<(i64, i64)>> {
    let model = SurfaceModel::hirzebruch(n);
    let ample = hirzebruch_ample_box(n, search);
    let k = model
        .numerics()
        .canonical()
        .expect("Hirzebruch model carries K")
        .clone();
    let mut tuple = vec![0usize; s as usize];
    loop {
        // test current tuple
        let mut total = k.clone();
        for &i in &tuple {
            let (a, b) = ample[i];
            let l = model.lattice().class_i64(&[a, b]).expect("rank 2");
            total = total.add(&l).expect("same lattice");
        }
        if !hirzebruch_nef_by_pairing(&model, &total) {
            return Some(tuple.iter().map(|&i| ample[i]).collect());
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == tuple.len() {
                return None;
            }
            tuple[pos] += 1;
            if tuple[pos] < ample.len() {
                break;
            }
            tuple[pos] = 0;
            pos += 1;
        }
    }
}

// ----- critical tuples on ℙ(E) ----------------------------------------------

/// Result of a critical-tuple search: the complete set of `n`-tuples of
/// Butler-ample classes in the box whose adjoint pushforward has minimal
/// slope exactly 1.
///
/// For a semistable profile that slope is `Σᵢ (aᵢd + n·deg Mᵢ)/n` with every
/// ampleness summand `aᵢd + n·deg Mᵢ` a positive integer, so slope 1 forces
/// each summand to equal 1. The critical tuples are therefore exactly the
/// `n`-th cartesian power of the per-slot solution set, which is what this
/// struct stores; [`CriticalTuples::iter`] walks the full product lazily.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalTuples {
    arity: u32,
    slot_solutions: Vec<PeLineClass>,
}

impl CriticalTuples {
    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Per-slot solutions of `n·deg M + a·d = 1` within the box (ample side
    /// `a ≥ 1` enforced).
    pub fn slot_solutions(&self) -> &[PeLineClass] {
        &self.slot_solutions
    }

    pub fn is_empty(&self) -> bool {
        self.slot_solutions.is_empty()
    }

    /// Number of critical tuples ( = |slots|ⁿ ).
    pub fn tuple_count(&self) -> u128 {
        (self.slot_solutions.len() as u128).pow(self.arity)
    }

    /// True iff the given tuple is critical (member of the product set).
    pub fn contains(&self, tuple: &[PeLineClass]) -> bool {
        tuple.len() == self.arity as usize && tuple.iter().all(|c| self.slot_solutions.contains(c))
    }

    /// Lazy iterator over all critical tuples in lexicographic slot order.
    pub fn iter(&self) -> CriticalTupleIter<'_> {
        CriticalTupleIter {
            tuples: self,
            indices: vec![0; self.arity as usize],
            done: self.slot_solutions.is_empty(),
        }
    }
}

/// Odometer iterator over the cartesian power of slot solutions.
pub struct CriticalTupleIter<'a> {
    tuples: &'a CriticalTuples,
    indices: Vec<usize>,
    done: bool,
}

impl<'a> Iterator for CriticalTupleIter<'a> {
    type Item = Vec<PeLineClass>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = self
            .indices
            .iter()
            .map(|&i| self.tuples.slot_solutions[i])
            .collect();
        let mut pos = 0;
        loop {
            if pos == self.indices.len() {
                self.done = true;
                break;
            }
            self.indices[pos] += 1;
            if self.indices[pos] < self.tuples.slot_solutions.len() {
                break;
            }
            self.indices[pos] = 0;
            pos += 1;
        }
        Some(out)
    }
}

/// Enumerates the critical tuples of a semistable profile within the box
/// `a ∈ [1, B]`, `deg M ∈ [−B, B]` (negative `a` never passes Butler).
pub fn critical_tuple_search(
    profile: &SlopeProfile,
    search: SearchBox,
) -> Result<CriticalTuples, OracleError> {
    if !profile.is_semistable() {
        return Err(OracleError::NotSemistable);
    }
    let n = profile.rank() as i64;
    let d = profile.degree();
    let bound = search.bound();
    let mut slots = Vec::new();
    for a in 1..=bound {
        for deg_m in -bound..=bound {
            let class = PeLineClass::new(a, deg_m);
            if butler_is_ample(profile, &class) && n * deg_m + a * d == 1 {
                slots.push(class);
            }
        }
    }
    Ok(CriticalTuples {
        arity: profile.rank(),
        slot_solutions: slots,
    })
}

/// Dense reference search: enumerates every `n`-tuple of Butler-ample
/// classes in the box and keeps those with adjoint pushforward slope
/// exactly 1. Exponential in the rank, so use only with tiny boxes; it
/// exists to cross-check the factored [`critical_tuple_search`].
pub fn critical_tuple_search_dense(
    profile: &SlopeProfile,
    search: SearchBox,
) -> Result<Vec<Vec<PeLineClass>>, OracleError> {
    if !profile.is_semistable() {
        return Err(OracleError::NotSemistable);
    }
    let bound = search.bound();
    let mut ample = Vec::new();
    for a in 1..=bound {
        for deg_m in -bound..=bound {
            let class = PeLineClass::new(a, deg_m);
            if butler_is_ample(profile, &class) {
                ample.push(class);
            }
        }
    }
    let n = profile.rank() as usize;
    let mut found = Vec::new();
    let mut indices = vec![0usize; n];
    if ample.is_empty() {
        return Ok(found);
    }
    loop {
        let tuple: Vec<PeLineClass> = indices.iter().map(|&i| ample[i]).collect();
        let slope = adjoint_pushforward_min_slope(profile, &tuple)
            .expect("all members are ample and the tuple has length n");
        if slope == rat(1) {
            found.push(tuple);
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(found);
            }
            indices[pos] += 1;
            if indices[pos] < ample.len() {
                break;
            }
            indices[pos] = 0;
            pos += 1;
        }
    }
}

/// Whether `n·y + d·x = 1` has an integer solution — the exact counterpart
/// of critical-tuple nonemptiness, independent of any box.
pub fn critical_equation_solvable(n: u32, d: i64) -> bool {
    crate::rational::gcd_i64(n as i64, d) == 1
}

/// Whether the box is large enough to contain a critical solution whenever
/// one exists: checks the minimal solution with `1 ≤ a ≤ n` directly.
pub fn critical_solution_within_box(n: u32, d: i64, search: SearchBox) -> bool {
    let ni = n as i64;
    for a in 1..=ni {
        let rem = 1 - a * d;
        if rem.rem_euclid(ni) == 0 {
            let deg_m = rem / ni;
            if a <= search.bound() && deg_m.abs() <= search.bound() {
                return true;
            }
        }
    }
    false
}

// ----- minimal ample self-intersection --------------------------------------

/// Minimal self-intersection over the ample integral classes of the model
/// inside the box, or `None` when the box contains no ample class.
///
/// Supported families (those with a closed-form ample oracle): Hirzebruch,
/// the K3 fibration lattice, the isotrivial fibration (enumerated over the
/// integral classes `m·ω + k·L` of its true Néron–Severi lattice), products
/// of curves, and abelian products of elliptic curves.
pub fn min_ample_selfint_search(
    model: &SurfaceModel,
    search: SearchBox,
) -> Result<Option<Rat>, OracleError> {
    let bound = search.bound();
    let mut best: Option<Rat> = None;
    let mut consider = |sq: Rat| {
        if best.as_ref().is_none_or(|b| sq < *b) {
            best = Some(sq);
        }
    };
    match model.family() {
        SurfaceFamily::Hirzebruch { n } => {
            for a in -bound..=bound {
                for b in -bound..=bound {
                    if crate::catalog::hirzebruch_is_ample(*n, a, b) {
                        let l = model.lattice().class_i64(&[a, b]).expect("rank 2");
                        consider(l.self_intersection());
                    }
                }
            }
        }
        SurfaceFamily::K3(data) if data.has_special_fibration => {
            // L = aE + bS ample iff L² > 0, L·E > 0, L·S > 0
            let e = model.lattice().basis_class(0);
            let s = model.lattice().basis_class(1);
            for a in -bound..=bound {
                for b in -bound..=bound {
                    let l = model.lattice().class_i64(&[a, b]).expect("rank 2");
                    let sq = l.self_intersection();
                    if sq > rat(0)
                        && l.pair(&e).expect("same lattice") > rat(0)
                        && l.pair(&s).expect("same lattice") > rat(0)
                    {
                        consider(sq);
                    }
                }
            }
        }
        SurfaceFamily::IsotrivialExample => {
            // Integral classes are m·ω + k·L (ω = ½F and L = ¼F + ½H span the
            // unimodular Néron–Severi lattice); ample means positive F- and
            // H-coefficients, i.e. k ≥ 1 and 2m + k ≥ 1.
            let classes =
                crate::catalog::isotrivial_classes(model).expect("model is the isotrivial example");
            for m in -bound..=bound {
                for k in -bound..=bound {
                    if k >= 1 && 2 * m + k >= 1 {
                        let v = classes
                            .canonical
                            .scale(&rat(m))
                            .add(&classes.ample_generator.scale(&rat(k)))
                            .expect("same lattice");
                        consider(v.self_intersection());
                    }
                }
            }
        }
        SurfaceFamily::ProductOfCurves { .. } => {
            for a in 1..=bound {
                for b in 1..=bound {
                    let l = model.lattice().class_i64(&[a, b]).expect("rank 2");
                    consider(l.self_intersection());
                }
            }
        }
        SurfaceFamily::Abelian(data) if data.product_of_elliptic => {
            for a in 1..=bound {
                for b in 1..=bound {
                    let l = model.lattice().class_i64(&[a, b]).expect("rank 2");
                    consider(l.self_intersection());
                }
            }
        }
        other => {
            return Err(OracleError::NoAmpleOracle {
                family: other.name(),
            })
        }
    }
    Ok(best)
}
