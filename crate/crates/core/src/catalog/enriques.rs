//! Genus-one fibrations on Enriques surfaces and the bisection criterion.
//!
//! Every Enriques surface carries a genus-one fibration over ℙ¹, with
//! exactly two multiple fibers (the half fibers). The Fujita number hinges on
//! whether some fibration has a bisection meeting every component of every
//! fiber:
//!
//! * if some fibration has all fibers irreducible (no ADE degenerations at
//!   all), any bisection works and `FN = 2`;
//! * if a fibration with such a bisection is declared, `FN = 2`;
//! * if every fibration has a fiber with at least three irreducible
//!   components, no bisection can meet them all (a bisection meets a fiber
//!   with total multiplicity 2) and `FN = 1`;
//! * otherwise the data is inconclusive and the verdict is the interval
//!   `[1, 2]`.
//!
//! Degenerate fibers are recorded by their ADE symbols. The component count
//! of the corresponding Kodaira fiber is `A_k → k+1` (cycle `I_{k+1}`),
//! `D_k → k+1` (`I*`), `E₆ → 7`, `E₇ → 8`, `E₈ → 9`; multiplicity of a half
//! fiber does not change its component count.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::CatalogError;
use crate::verdict::{FujitaVerdict, TraceStep, Witness};

/// An ADE symbol labelling a degenerate Kodaira fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum AdeSymbol {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
}

impl AdeSymbol {
    /// `A_k`, valid for `k ≥ 1`.
    pub fn a(k: u32) -> Result<AdeSymbol, CatalogError> {
        if k >= 1 {
            Ok(AdeSymbol::A(k))
        } else {
            Err(CatalogError::invalid("ADE symbol A_k requires k ≥ 1"))
        }
    }

    /// `D_k`, valid for `k ≥ 4`.
    pub fn d(k: u32) -> Result<AdeSymbol, CatalogError> {
        if k >= 4 {
            Ok(AdeSymbol::D(k))
        } else {
            Err(CatalogError::invalid("ADE symbol D_k requires k ≥ 4"))
        }
    }

    /// Number of irreducible components of the corresponding Kodaira fiber.
    pub fn component_count(self) -> u32 {
        match self {
            AdeSymbol::A(k) => k + 1,
            AdeSymbol::D(k) => k + 1,
            AdeSymbol::E6 => 7,
            AdeSymbol::E7 => 8,
            AdeSymbol::E8 => 9,
        }
    }
}

impl fmt::Display for AdeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeSymbol::A(k) => write!(f, "A{k}"),
            AdeSymbol::D(k) => write!(f, "D{k}"),
            AdeSymbol::E6 => write!(f, "E6"),
            AdeSymbol::E7 => write!(f, "E7"),
            AdeSymbol::E8 => write!(f, "E8"),
        }
    }
}

impl std::str::FromStr for AdeSymbol {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || CatalogError::invalid(&format!("invalid ADE symbol `{s}`"));
        let (head, tail) = s.split_at(if s.is_empty() { 0 } else { 1 });
        let k: u32 = tail.parse().map_err(|_| bad())?;
        match head {
            "A" | "a" => AdeSymbol::a(k),
            "D" | "d" => AdeSymbol::d(k),
            "E" | "e" => match k {
                6 => Ok(AdeSymbol::E6),
                7 => Ok(AdeSymbol::E7),
                8 => Ok(AdeSymbol::E8),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for AdeSymbol {
    type Error = CatalogError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<AdeSymbol> for String {
    fn from(s: AdeSymbol) -> String {
        s.to_string()
    }
}

/// Number of irreducible components of the Kodaira fiber named by `symbol`.
/// Multiplicity is irrelevant: a half fiber has the same component count as
/// an ordinary fiber of the same type, hence the unused flag.
pub fn enriques_component_count(symbol: AdeSymbol, _is_half_fiber: bool) -> u32 {
    symbol.component_count()
}

/// One genus-one fibration on an Enriques surface, described by the ADE
/// symbols of its degenerate fibers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusOneFibration {
    /// Symbols of singular non-multiple fibers.
    #[serde(default)]
    pub singular_nonmultiple: Vec<AdeSymbol>,
    /// Symbols of singular half fibers.
    #[serde(default)]
    pub half_fibers: Vec<AdeSymbol>,
    /// Declared existence of a bisection meeting every component of every
    /// fiber. `None` means undetermined.
    #[serde(default)]
    pub has_allcomponent_bisection: Option<bool>,
}

impl GenusOneFibration {
    /// Fibration with all fibers irreducible and no declared bisection flag.
    pub fn all_irreducible() -> GenusOneFibration {
        GenusOneFibration {
            singular_nonmultiple: Vec::new(),
            half_fibers: Vec::new(),
            has_allcomponent_bisection: None,
        }
    }

    /// All ADE symbols of the fibration, half fibers included.
    pub fn symbols(&self) -> impl Iterator<Item = AdeSymbol> + '_ {
        self.singular_nonmultiple
            .iter()
            .chain(self.half_fibers.iter())
            .copied()
    }

    /// True iff no degenerate fiber is recorded, i.e. every fiber is
    /// irreducible.
    pub fn all_fibers_irreducible(&self) -> bool {
        self.singular_nonmultiple.is_empty() && self.half_fibers.is_empty()
    }

    /// Largest component count among the degenerate fibers (1 when none).
    pub fn max_component_count(&self) -> u32 {
        self.symbols()
            .map(AdeSymbol::component_count)
            .max()
            .unwrap_or(1)
    }

    /// True iff some fiber has at least three irreducible components.
    pub fn has_three_component_fiber(&self) -> bool {
        self.max_component_count() >= 3
    }

    fn describe(&self) -> String {
        let join = |v: &[AdeSymbol]| {
            if v.is_empty() {
                "-".to_string()
            } else {
                v.iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join("+")
            }
        };
        format!(
            "{}|{}",
            join(&self.singular_nonmultiple),
            join(&self.half_fibers)
        )
    }
}

/// Declared genus-one fibration data of an Enriques surface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnriquesData {
    pub fibrations: Vec<GenusOneFibration>,
}

impl EnriquesData {
    /// Every Enriques surface has a genus-one fibration, so the list must be
    /// nonempty.
    pub fn new(fibrations: Vec<GenusOneFibration>) -> Result<EnriquesData, CatalogError> {
        if fibrations.is_empty() {
            return Err(CatalogError::EmptyFibrationList);
        }
        Ok(EnriquesData { fibrations })
    }

    /// Surrogate for an unnodal surface: a single fibration with all fibers
    /// irreducible and an all-component bisection.
    pub fn unnodal() -> EnriquesData {
        EnriquesData {
            fibrations: vec![GenusOneFibration {
                singular_nonmultiple: Vec::new(),
                half_fibers: Vec::new(),
                has_allcomponent_bisection: Some(true),
            }],
        }
    }
}

/// Fujita number of an Enriques surface from its fibration data.
pub fn enriques_fn(fibrations: &[GenusOneFibration]) -> Result<FujitaVerdict, CatalogError> {
    if fibrations.is_empty() {
        return Err(CatalogError::EmptyFibrationList);
    }
    let describe_all = |fs: &[GenusOneFibration]| {
        fs.iter()
            .map(GenusOneFibration::describe)
            .collect::<Vec<_>>()
            .join("; ")
    };

    if let Some(fib) = fibrations.iter().find(|f| f.all_fibers_irreducible()) {
        return Ok(FujitaVerdict::exact(
            2,
            TraceStep::with_witness(
                "enriques.irreducible-fibration",
                "a genus-one fibration with all fibers irreducible makes every bisection meet \
                 every fiber component, producing an ample class whose adjoint has base points",
                Witness::record(vec![("fibration", fib.describe())]),
            ),
        ));
    }
    if let Some(fib) = fibrations
        .iter()
        .find(|f| f.has_allcomponent_bisection == Some(true))
    {
        return Ok(FujitaVerdict::exact(
            2,
            TraceStep::with_witness(
                "enriques.allcomponent-bisection",
                "a declared bisection meeting every component of every fiber yields an ample \
                 class L = B + f*D whose adjoint has base points along the half fibers",
                Witness::record(vec![("fibration", fib.describe())]),
            ),
        ));
    }
    if fibrations.iter().all(|f| f.has_three_component_fiber()) {
        let counts = fibrations
            .iter()
            .map(|f| f.max_component_count().to_string())
            .collect::<Vec<_>>()
            .join(",");
        return Ok(FujitaVerdict::exact(
            1,
            TraceStep::with_witness(
                "enriques.three-component-everywhere",
                "every genus-one fibration has a fiber with at least three components, so no \
                 bisection meets all components and every adjoint of an ample class is \
                 globally generated; the canonical class itself is not",
                Witness::record(vec![
                    ("fibrations", describe_all(fibrations)),
                    ("max_component_counts", counts),
                ]),
            ),
        ));
    }
    Ok(FujitaVerdict::interval(
        1,
        2,
        TraceStep::with_witness(
            "enriques.inconclusive",
            "criteria inconclusive: no all-irreducible fibration or declared all-component \
             bisection, and some fibration has every fiber with fewer than three components",
            Witness::record(vec![("fibrations", describe_all(fibrations))]),
        ),
    ))
}

/// Fibration list of table entry no. 24 (half fibers `A3`, `A4`; ordinary
/// degenerations `A3+2A1`, `A4`, `D4`, `D5`).
pub fn enriques_example_24() -> EnriquesData {
    let fib = |nonmult: Vec<AdeSymbol>, half: Vec<AdeSymbol>| GenusOneFibration {
        singular_nonmultiple: nonmult,
        half_fibers: half,
        has_allcomponent_bisection: None,
    };
    EnriquesData {
        fibrations: vec![
            fib(vec![], vec![AdeSymbol::A(3)]),
            fib(vec![], vec![AdeSymbol::A(4)]),
            fib(
                vec![AdeSymbol::A(3), AdeSymbol::A(1), AdeSymbol::A(1)],
                vec![],
            ),
            fib(vec![AdeSymbol::A(4)], vec![]),
            fib(vec![AdeSymbol::D(4)], vec![]),
            fib(vec![AdeSymbol::D(5)], vec![]),
        ],
    }
}

/// Fibration list of table entry no. 47 (half fiber `A4`; ordinary
/// degenerations `A5+A1`, `D5`, `E6`).
pub fn enriques_example_47() -> EnriquesData {
    let fib = |nonmult: Vec<AdeSymbol>, half: Vec<AdeSymbol>| GenusOneFibration {
        singular_nonmultiple: nonmult,
        half_fibers: half,
        has_allcomponent_bisection: None,
    };
    EnriquesData {
        fibrations: vec![
            fib(vec![], vec![AdeSymbol::A(4)]),
            fib(vec![AdeSymbol::A(5), AdeSymbol::A(1)], vec![]),
            fib(vec![AdeSymbol::D(5)], vec![]),
            fib(vec![AdeSymbol::E6], vec![]),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn component_counts() {
        assert_eq!(AdeSymbol::A(3).component_count(), 4);
        assert_eq!(AdeSymbol::A(1).component_count(), 2);
        assert_eq!(AdeSymbol::E6.component_count(), 7);
        assert_eq!(AdeSymbol::E7.component_count(), 8);
        assert_eq!(AdeSymbol::E8.component_count(), 9);
        assert_eq!(AdeSymbol::D(4).component_count(), 5);
        // multiplicity does not change the count
        assert_eq!(
            enriques_component_count(AdeSymbol::A(3), true),
            enriques_component_count(AdeSymbol::A(3), false)
        );
    }

    #[test]
    fn symbol_parsing() {
        assert_eq!("A3".parse::<AdeSymbol>().unwrap(), AdeSymbol::A(3));
        assert_eq!("D5".parse::<AdeSymbol>().unwrap(), AdeSymbol::D(5));
        assert_eq!("E8".parse::<AdeSymbol>().unwrap(), AdeSymbol::E8);
        assert!("A0".parse::<AdeSymbol>().is_err());
        assert!("D3".parse::<AdeSymbol>().is_err());
        assert!("E5".parse::<AdeSymbol>().is_err());
        assert!("B2".parse::<AdeSymbol>().is_err());
        assert!("".parse::<AdeSymbol>().is_err());
    }

    #[test]
    fn unnodal_gets_two() {
        let v = enriques_fn(&EnriquesData::unnodal().fibrations).unwrap();
        assert_eq!(v.exact_value(), Some(2));
    }

    #[test]
    fn table_examples_get_one() {
        for data in [enriques_example_24(), enriques_example_47()] {
            let v = enriques_fn(&data.fibrations).unwrap();
            assert_eq!(v.exact_value(), Some(1));
        }
    }

    #[test]
    fn irreducible_fibration_takes_precedence() {
        // one fibration with all fibers irreducible, another with big fibers:
        // the verdict must be 2, never 1
        let data = vec![
            GenusOneFibration::all_irreducible(),
            GenusOneFibration {
                singular_nonmultiple: vec![AdeSymbol::E8],
                half_fibers: vec![],
                has_allcomponent_bisection: None,
            },
        ];
        assert_eq!(enriques_fn(&data).unwrap().exact_value(), Some(2));
    }

    #[test]
    fn two_component_fibers_are_inconclusive() {
        let data = vec![GenusOneFibration {
            singular_nonmultiple: vec![AdeSymbol::A(1)],
            half_fibers: vec![],
            has_allcomponent_bisection: None,
        }];
        let v = enriques_fn(&data).unwrap();
        assert_eq!((v.lower, v.upper, v.exact), (1, 2, false));
    }

    #[test]
    fn empty_list_rejected() {
        assert!(matches!(
            enriques_fn(&[]),
            Err(CatalogError::EmptyFibrationList)
        ));
        assert!(EnriquesData::new(vec![]).is_err());
    }
}
