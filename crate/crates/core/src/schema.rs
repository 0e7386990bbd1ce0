//! JSON surface-description schema.
//!
//! A description file is either a single `{"family": ..., "params": {...}}`
//! object or `{"batch": [...]}`. Each family has a typed parameter object;
//! unknown families are rejected with the list of supported ones, and
//! parameter errors name the offending field.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bundle::{HnBlock, SlopeProfile};
use crate::catalog::{
    AbelianData, BiellipticGroup, CatalogError, EllFibData, EnriquesData, GenusOneFibration,
    K3Data, SurfaceModel,
};
use crate::rational::parse_rat;

/// Families accepted by the schema, in documentation order.
pub const SUPPORTED_FAMILIES: [&str; 15] = [
    "projective-plane",
    "hirzebruch",
    "proj-bundle-curve",
    "abelian",
    "bielliptic",
    "k3",
    "enriques",
    "elliptic-kd1",
    "isotrivial-example",
    "product-of-curves",
    "godeaux",
    "very-general-hypersurface",
    "double-cover-ppav",
    "sym-square",
    "pencil-blowup",
];

/// Errors from parsing and validating surface descriptions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemaError {
    /// Not valid JSON at all.
    Json(String),
    /// Valid JSON but not a description (missing `family`/`batch`).
    Shape(String),
    /// Family name not in [`SUPPORTED_FAMILIES`].
    UnknownFamily { family: String },
    /// Parameters failed to deserialize; the message names the field.
    BadParams { family: String, message: String },
    /// Parameters deserialized but violate a family constraint.
    Invalid { family: String, message: String },
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemaError::Json(m) => write!(f, "invalid JSON: {m}"),
            SchemaError::Shape(m) => write!(f, "invalid description: {m}"),
            SchemaError::UnknownFamily { family } => write!(
                f,
                "unknown family `{family}`; supported families: {}",
                SUPPORTED_FAMILIES.join(", ")
            ),
            SchemaError::BadParams { family, message } => {
                write!(f, "bad parameters for family `{family}`: {message}")
            }
            SchemaError::Invalid { family, message } => {
                write!(f, "invalid `{family}` surface: {message}")
            }
        }
    }
}

impl std::error::Error for SchemaError {}

/// One surface description: a family name plus its parameter object.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurfaceDescription {
    pub family: String,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub params: Value,
}

impl SurfaceDescription {
    /// Builds the surface model this description denotes.
    pub fn to_model(&self) -> Result<SurfaceModel, SchemaError> {
        build_model(&self.family, &self.params)
    }
}

/// Parses a description document: either a single description or a batch.
/// Always returns the list in input order.
pub fn parse_description_document(text: &str) -> Result<Vec<SurfaceDescription>, SchemaError> {
    let value: Value = serde_json::from_str(text).map_err(|e| SchemaError::Json(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| SchemaError::Shape("top level must be a JSON object".to_string()))?;
    if let Some(batch) = obj.get("batch") {
        let items: Vec<SurfaceDescription> = serde_json::from_value(batch.clone())
            .map_err(|e| SchemaError::Shape(format!("bad batch entry: {e}")))?;
        if items.is_empty() {
            return Err(SchemaError::Shape("batch must be nonempty".to_string()));
        }
        Ok(items)
    } else if obj.contains_key("family") {
        let single: SurfaceDescription =
            serde_json::from_value(value).map_err(|e| SchemaError::Shape(e.to_string()))?;
        Ok(vec![single])
    } else {
        Err(SchemaError::Shape(
            "expected a `family` field or a `batch` array".to_string(),
        ))
    }
}

fn params_as<T: serde::de::DeserializeOwned>(
    family: &str,
    params: &Value,
) -> Result<T, SchemaError> {
    serde_json::from_value(params.clone()).map_err(|e| SchemaError::BadParams {
        family: family.to_string(),
        message: e.to_string(),
    })
}

fn invalid(family: &str, e: CatalogError) -> SchemaError {
    SchemaError::Invalid {
        family: family.to_string(),
        message: e.to_string(),
    }
}

#[derive(Deserialize)]
struct HirzebruchParams {
    n: u32,
}

#[derive(Deserialize)]
struct HnBlockParams {
    slope: String,
    rank: u32,
}

#[derive(Deserialize)]
struct PeParams {
    rank: u32,
    degree: i64,
    #[serde(default)]
    genus: u32,
    #[serde(default)]
    stable: bool,
    #[serde(default)]
    sym_powers_stable: bool,
    #[serde(default)]
    hn: Option<Vec<HnBlockParams>>,
}

#[derive(Deserialize)]
struct K3Params {
    has_special_fibration: bool,
}

#[derive(Deserialize)]
struct EnriquesParams {
    fibrations: Vec<GenusOneFibration>,
}

#[derive(Deserialize)]
struct BiellipticParams {
    group: BiellipticGroup,
}

#[derive(Deserialize)]
struct ProductParams {
    g1: u32,
    g2: u32,
}

#[derive(Deserialize)]
struct DegreeParams {
    degree: u32,
}

#[derive(Deserialize)]
struct DoubleCoverParams {
    #[serde(default)]
    picard_number_one: bool,
}

#[derive(Deserialize)]
struct GenusParams {
    genus: u32,
}

#[derive(Deserialize)]
struct PencilParams {
    d: u32,
}

fn build_profile(family: &str, p: PeParams) -> Result<SlopeProfile, SchemaError> {
    let mk_err = |message: String| SchemaError::Invalid {
        family: family.to_string(),
        message,
    };
    let profile = match p.hn {
        None => SlopeProfile::semistable(p.rank, p.degree, p.stable, p.sym_powers_stable, p.genus),
        Some(blocks) => {
            let mut parsed = Vec::with_capacity(blocks.len());
            for (i, b) in blocks.iter().enumerate() {
                let slope = parse_rat(&b.slope).ok_or_else(|| {
                    mk_err(format!("hn[{i}].slope: `{}` is not a rational", b.slope))
                })?;
                parsed.push(HnBlock {
                    slope,
                    rank: b.rank,
                });
            }
            SlopeProfile::new(
                p.rank,
                p.degree,
                parsed,
                p.stable,
                p.sym_powers_stable,
                p.genus,
            )
        }
    };
    profile.map_err(|e| mk_err(e.to_string()))
}

fn build_model(family: &str, params: &Value) -> Result<SurfaceModel, SchemaError> {
    match family {
        "projective-plane" => Ok(SurfaceModel::projective_plane()),
        "hirzebruch" => {
            let p: HirzebruchParams = params_as(family, params)?;
            Ok(SurfaceModel::hirzebruch(p.n))
        }
        "proj-bundle-curve" => {
            let p: PeParams = params_as(family, params)?;
            let profile = build_profile(family, p)?;
            SurfaceModel::ruled_surface(profile).map_err(|e| invalid(family, e))
        }
        "abelian" => {
            let data: AbelianData = params_as(family, params)?;
            SurfaceModel::abelian(data).map_err(|e| invalid(family, e))
        }
        "bielliptic" => {
            let p: BiellipticParams = params_as(family, params)?;
            Ok(SurfaceModel::bielliptic(p.group))
        }
        "k3" => {
            let p: K3Params = params_as(family, params)?;
            Ok(SurfaceModel::k3(K3Data {
                has_special_fibration: p.has_special_fibration,
            }))
        }
        "enriques" => {
            let p: EnriquesParams = params_as(family, params)?;
            let data = EnriquesData::new(p.fibrations).map_err(|e| invalid(family, e))?;
            SurfaceModel::enriques(data).map_err(|e| invalid(family, e))
        }
        "elliptic-kd1" => {
            let data: EllFibData = params_as(family, params)?;
            SurfaceModel::elliptic_kd1(data).map_err(|e| invalid(family, e))
        }
        "isotrivial-example" => Ok(SurfaceModel::isotrivial_example()),
        "product-of-curves" => {
            let p: ProductParams = params_as(family, params)?;
            Ok(SurfaceModel::product_of_curves(p.g1, p.g2))
        }
        "godeaux" => Ok(SurfaceModel::godeaux_quotient()),
        "very-general-hypersurface" => {
            let p: DegreeParams = params_as(family, params)?;
            SurfaceModel::very_general_hypersurface(p.degree).map_err(|e| invalid(family, e))
        }
        "double-cover-ppav" => {
            let p: DoubleCoverParams = params_as(family, params)?;
            Ok(SurfaceModel::double_cover_ppav(p.picard_number_one))
        }
        "sym-square" => {
            let p: GenusParams = params_as(family, params)?;
            Ok(SurfaceModel::sym_square(p.genus))
        }
        "pencil-blowup" => {
            let p: PencilParams = params_as(family, params)?;
            SurfaceModel::pencil_blowup(p.d).map_err(|e| invalid(family, e))
        }
        other => Err(SchemaError::UnknownFamily {
            family: other.to_string(),
        }),
    }
}

/// Serializable report of a model's numerical data: family, lattice, the
/// canonical class, and χ(𝒪). This is the lattice side of the JSON schema.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SurfaceReport {
    pub family: String,
    pub basis: Vec<String>,
    pub gram: Vec<Vec<i64>>,
    /// Canonical class coordinates (exact rationals as strings), when the
    /// model carries it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical: Option<Vec<String>>,
    pub chi_o: i64,
}

impl SurfaceReport {
    pub fn of(model: &SurfaceModel) -> SurfaceReport {
        SurfaceReport {
            family: model.name(),
            basis: model.lattice().basis_labels().to_vec(),
            gram: model.lattice().gram_rows_i64(),
            canonical: model.numerics().canonical().map(|k| k.coord_strings()),
            chi_o: model.numerics().chi_o(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::classify;

    #[test]
    fn parse_single_description() {
        let models =
            parse_description_document(r#"{"family":"hirzebruch","params":{"n":4}}"#).unwrap();
        assert_eq!(models.len(), 1);
        let model = models[0].to_model().unwrap();
        assert_eq!(classify(&model).unwrap().exact_value(), Some(2));
    }

    #[test]
    fn parse_batch() {
        let text = r#"{"batch":[
            {"family":"projective-plane"},
            {"family":"k3","params":{"has_special_fibration":false}}
        ]}"#;
        let items = parse_description_document(text).unwrap();
        assert_eq!(items.len(), 2);
        assert_eq!(
            classify(&items[1].to_model().unwrap())
                .unwrap()
                .exact_value(),
            Some(0)
        );
    }

    #[test]
    fn unknown_family_lists_supported() {
        let err = parse_description_document(r#"{"family":"calabi-yau"}"#).unwrap()[0]
            .to_model()
            .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("calabi-yau"));
        assert!(msg.contains("hirzebruch"));
        assert!(msg.contains("enriques"));
    }

    #[test]
    fn bad_params_name_the_field() {
        let items = parse_description_document(r#"{"family":"hirzebruch","params":{}}"#).unwrap();
        let err = items[0].to_model().unwrap_err();
        assert!(err.to_string().contains('n'), "{err}");

        let items =
            parse_description_document(r#"{"family":"abelian","params":{"min_ample_selfint":3}}"#)
                .unwrap();
        let err = items[0].to_model().unwrap_err();
        assert!(err.to_string().contains("even"), "{err}");
    }

    #[test]
    fn enriques_description_with_symbols() {
        let text = r#"{"family":"enriques","params":{"fibrations":[
            {"singular_nonmultiple":["A3","A1","A1"],"half_fibers":[]},
            {"singular_nonmultiple":[],"half_fibers":["A4"]}
        ]}}"#;
        let model = parse_description_document(text).unwrap()[0]
            .to_model()
            .unwrap();
        // both fibrations have a ≥3-component fiber → FN = 1
        assert_eq!(classify(&model).unwrap().exact_value(), Some(1));
    }

    #[test]
    fn proj_bundle_descriptions() {
        let text = r#"{"family":"proj-bundle-curve","params":{
            "rank":2,"degree":1,"genus":2,"stable":true
        }}"#;
        let model = parse_description_document(text).unwrap()[0]
            .to_model()
            .unwrap();
        assert_eq!(classify(&model).unwrap().exact_value(), Some(3));

        // explicit filtration: unstable bundle
        let text = r#"{"family":"proj-bundle-curve","params":{
            "rank":2,"degree":2,
            "hn":[{"slope":"2","rank":1},{"slope":"0","rank":1}]
        }}"#;
        let model = parse_description_document(text).unwrap()[0]
            .to_model()
            .unwrap();
        assert_eq!(classify(&model).unwrap().exact_value(), Some(2));

        // rank ≥ 3 is not a surface
        let text = r#"{"family":"proj-bundle-curve","params":{"rank":3,"degree":1}}"#;
        let err = parse_description_document(text).unwrap()[0]
            .to_model()
            .unwrap_err();
        assert!(err.to_string().contains("rank-2"));

        // inconsistent filtration
        let text = r#"{"family":"proj-bundle-curve","params":{
            "rank":2,"degree":1,
            "hn":[{"slope":"1/3","rank":2}]
        }}"#;
        assert!(parse_description_document(text).unwrap()[0]
            .to_model()
            .is_err());
    }

    #[test]
    fn surface_report_round_trips() {
        let model = SurfaceModel::isotrivial_example();
        let report = SurfaceReport::of(&model);
        assert_eq!(report.gram, vec![vec![0, 4], vec![4, 0]]);
        assert_eq!(
            report.canonical.as_deref(),
            Some(&["1/2".to_string(), "0".to_string()][..])
        );
        let json = serde_json::to_string(&report).unwrap();
        let back: SurfaceReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            parse_description_document("not json"),
            Err(SchemaError::Json(_))
        ));
        assert!(matches!(
            parse_description_document(r#"{"oops":1}"#),
            Err(SchemaError::Shape(_))
        ));
        assert!(matches!(
            parse_description_document(r#"{"batch":[]}"#),
            Err(SchemaError::Shape(_))
        ));
    }
}
