//! Built-in tables: the headline classification, the bielliptic types, the
//! Enriques examples, and the ℙ(E) decision grid. Output is deterministic
//! (fixed row and column order) in either markdown or CSV.

use anyhow::Result;

use fujita_core::bundle::{fujita_number_pe, HnBlock, SlopeProfile};
use fujita_core::catalog::{
    enriques_example_24, enriques_example_47, AbelianData, BiellipticGroup, EllFibData,
    EnriquesData, K3Data, SurfaceModel,
};
use fujita_core::engine::classify;
use fujita_core::rational::rat;
use fujita_core::verdict::FujitaVerdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Markdown => {
                let mut out = String::new();
                out.push_str(&format!("| {} |\n", self.header.join(" | ")));
                out.push_str(&format!(
                    "|{}\n",
                    self.header.iter().map(|_| " --- |").collect::<String>()
                ));
                for row in &self.rows {
                    out.push_str(&format!("| {} |\n", row.join(" | ")));
                }
                out
            }
            TableFormat::Csv => {
                let esc = |cell: &String| {
                    if cell.contains(',') || cell.contains('"') {
                        format!("\"{}\"", cell.replace('"', "\"\""))
                    } else {
                        cell.clone()
                    }
                };
                let mut out = String::new();
                out.push_str(&self.header.iter().map(esc).collect::<Vec<_>>().join(","));
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&row.iter().map(esc).collect::<Vec<_>>().join(","));
                    out.push('\n');
                }
                out
            }
        }
    }
}

fn verdict_set(verdicts: &[FujitaVerdict]) -> String {
    let mut values: Vec<u32> = verdicts
        .iter()
        .filter_map(FujitaVerdict::exact_value)
        .collect();
    values.sort_unstable();
    values.dedup();
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// One row per line of the headline classification, with the FN values the
/// engine computes on representative catalog instances.
pub fn table_headline() -> Result<Table> {
    let classify_all = |models: Vec<SurfaceModel>| -> Result<Vec<FujitaVerdict>> {
        models.iter().map(|m| Ok(classify(m)?)).collect()
    };
    let ruled = vec![
        SurfaceModel::ruled_surface(SlopeProfile::semistable(2, 0, false, false, 1)?)?,
        SurfaceModel::ruled_surface(SlopeProfile::stable(2, 1, false, 2)?)?,
    ];
    let abelian = vec![
        SurfaceModel::abelian(AbelianData::principally_polarized())?,
        SurfaceModel::abelian(AbelianData::new(6, false, None)?)?,
    ];
    let k3 = vec![
        SurfaceModel::k3(K3Data {
            has_special_fibration: true,
        }),
        SurfaceModel::k3(K3Data {
            has_special_fibration: false,
        }),
    ];
    let enriques = vec![
        SurfaceModel::enriques(EnriquesData::unnodal())?,
        SurfaceModel::enriques(enriques_example_24())?,
    ];
    let kodaira1 = vec![
        SurfaceModel::elliptic_kd1(EllFibData::new(true, true, true, vec![], 2)?)?,
        SurfaceModel::isotrivial_example(),
    ];
    let general_type = vec![
        SurfaceModel::very_general_hypersurface(5)?,
        SurfaceModel::product_of_curves(2, 2),
        SurfaceModel::godeaux_quotient(),
    ];

    let rows = vec![
        (
            "Kodaira dim < 0: projective plane",
            classify_all(vec![SurfaceModel::projective_plane()])?,
        ),
        (
            "Kodaira dim < 0: Hirzebruch surfaces",
            classify_all((0..=4).map(SurfaceModel::hirzebruch).collect())?,
        ),
        ("Kodaira dim < 0: ruled surfaces", classify_all(ruled)?),
        ("Kodaira dim 0: abelian surfaces", classify_all(abelian)?),
        (
            "Kodaira dim 0: bielliptic surfaces",
            classify_all(
                BiellipticGroup::ALL
                    .iter()
                    .map(|&g| SurfaceModel::bielliptic(g))
                    .collect(),
            )?,
        ),
        ("Kodaira dim 0: K3 surfaces", classify_all(k3)?),
        ("Kodaira dim 0: Enriques surfaces", classify_all(enriques)?),
        (
            "Kodaira dim 1: elliptic fibrations",
            classify_all(kodaira1)?,
        ),
        ("Kodaira dim 2: general type", classify_all(general_type)?),
    ];

    Ok(Table {
        header: vec!["classification line".into(), "Fujita numbers".into()],
        rows: rows
            .into_iter()
            .map(|(label, verdicts)| vec![label.to_string(), verdict_set(&verdicts)])
            .collect(),
    })
}

/// The seven bielliptic types with group order, stabilizer, and `L²`.
pub fn table_bielliptic() -> Table {
    let rows = BiellipticGroup::ALL
        .iter()
        .map(|&g| {
            let l_sq = match g.descended_l_sq() {
                Some(d) => format!("{} (descent yields L² = {d})", g.distinguished_l_sq()),
                None => g.distinguished_l_sq().to_string(),
            };
            vec![
                g.label().to_string(),
                g.order().to_string(),
                g.stabilizer_label().to_string(),
                l_sq,
            ]
        })
        .collect();
    Table {
        header: vec![
            "group".into(),
            "#G".into(),
            "stabilizer".into(),
            "L²".into(),
        ],
        rows,
    }
}

/// The two Enriques table entries with their fibrations, component counts,
/// and engine verdicts.
pub fn table_enriques_examples() -> Result<Table> {
    let mut rows = Vec::new();
    for (label, data) in [("24", enriques_example_24()), ("47", enriques_example_47())] {
        for fib in &data.fibrations {
            let fmt = |syms: &[fujita_core::catalog::AdeSymbol]| {
                if syms.is_empty() {
                    "-".to_string()
                } else {
                    syms.iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join("+")
                }
            };
            rows.push(vec![
                label.to_string(),
                fmt(&fib.singular_nonmultiple),
                fmt(&fib.half_fibers),
                fib.max_component_count().to_string(),
            ]);
        }
        let verdict = classify(&SurfaceModel::enriques(data)?)?;
        rows.push(vec![
            label.to_string(),
            "(verdict)".into(),
            String::new(),
            verdict.bounds_string(),
        ]);
    }
    Ok(Table {
        header: vec![
            "entry".into(),
            "singular non-multiple fibers".into(),
            "singular half fibers".into(),
            "max components / FN".into(),
        ],
        rows,
    })
}

/// An unstable profile of total rank `n` and degree `d` (a line subbundle of
/// slope above the mean).
fn unstable_profile(n: u32, d: i64) -> SlopeProfile {
    let top = rat(d.max(0) + 1);
    let rest_rank = n - 1;
    let rest_slope = (rat(d) - &top) / rat(rest_rank as i64);
    SlopeProfile::new(
        n,
        d,
        vec![
            HnBlock {
                slope: top,
                rank: 1,
            },
            HnBlock {
                slope: rest_slope,
                rank: rest_rank,
            },
        ],
        false,
        false,
        2,
    )
    .expect("slopes descend by construction")
}

/// The ℙ(E) decision grid over `n ∈ [2,5]`, `d ∈ [−6,6]`: the verdict for a
/// non-semistable bundle, a strictly semistable one, a bare stable one, and
/// a stable one with stable symmetric powers on a genus ≥ 2 base.
pub fn table_pe_grid() -> Result<Table> {
    let mut rows = Vec::new();
    for n in 2..=5u32 {
        for d in -6i64..=6 {
            let not_semistable = fujita_number_pe(&unstable_profile(n, d));
            let strictly = fujita_number_pe(&SlopeProfile::semistable(n, d, false, false, 2)?);
            let stable_bare = fujita_number_pe(&SlopeProfile::stable(n, d, false, 2)?);
            let stable_generic = fujita_number_pe(&SlopeProfile::stable(n, d, true, 2)?);
            rows.push(vec![
                n.to_string(),
                d.to_string(),
                not_semistable.bounds_string(),
                strictly.bounds_string(),
                stable_bare.bounds_string(),
                stable_generic.bounds_string(),
            ]);
        }
    }
    Ok(Table {
        header: vec![
            "n".into(),
            "d".into(),
            "not semistable".into(),
            "strictly semistable".into(),
            "stable".into(),
            "stable, stable symmetric powers (g ≥ 2)".into(),
        ],
        rows,
    })
}

/// Sanity cross-check used by the verify runner: the grid never leaves the
/// window `[n, n+1]` and the strictly semistable column is constantly `n`.
pub fn pe_grid_consistent() -> Result<bool> {
    for n in 2..=5u32 {
        for d in -6i64..=6 {
            let strictly = fujita_number_pe(&SlopeProfile::semistable(n, d, false, false, 2)?);
            if strictly.exact_value() != Some(n) {
                return Ok(false);
            }
            let stable = fujita_number_pe(&SlopeProfile::stable(n, d, true, 2)?);
            if stable.lower < n || stable.upper > n + 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
