//! Embedded reference datasets, programmatic families, and the shipped
//! certificate trees.

mod families;
mod refcerts;
mod trees;

pub use families::{
    cross_polytope_boundary, cyclic_polytope_boundary, klein_bottle, moment_curve_configuration,
    novik_zheng_d4, NovikZheng,
};
pub use refcerts::*;
pub use trees::{derive_edges, reference_certificates, resolve_final, resolve_tree, tree_for, RefCert};

use thiserror::Error;

use crate::complex::{ComplexError, OrientedComplex};
use crate::Vertex;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("unknown dataset `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A shipped facet list with its expected properties.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub name: &'static str,
    pub text: String,
    pub description: &'static str,
    /// Expected face counts by dimension, when pinned.
    pub f_vector: Option<Vec<u64>>,
    pub closed: bool,
    /// Realizability verdict, when known.
    pub realizable: Option<bool>,
}

impl Dataset {
    pub fn load(&self) -> Result<OrientedComplex, ComplexError> {
        OrientedComplex::from_text(&self.text)
    }
}

macro_rules! emb {
    ($file:literal) => {
        include_str!(concat!("../../data/", $file))
    };
}

/// Every dataset in the catalog, controls included.
pub fn catalog() -> Vec<Dataset> {
    vec![
        Dataset {
            name: "example-1.1",
            text: emb!("example_s1.fct").to_owned(),
            description: "non-realizable 3-sphere on 8 vertices admitting a one-relation certificate",
            f_vector: Some(vec![8, 27, 38, 19]),
            closed: true,
            realizable: Some(false),
        },
        Dataset {
            name: "jockusch-d3-6",
            text: emb!("jockusch_d3_6.fct").to_owned(),
            description: "Jockusch's centrally symmetric 3-sphere Delta^3_6",
            f_vector: Some(vec![12, 60, 96, 48]),
            closed: true,
            realizable: Some(false),
        },
        Dataset {
            name: "jockusch-d3-5",
            text: emb!("jockusch_d3_5.fct").to_owned(),
            description: "Jockusch's centrally symmetric 3-sphere Delta^3_5",
            f_vector: Some(vec![10, 40, 60, 30]),
            closed: true,
            realizable: Some(false),
        },
        Dataset {
            name: "zheng-Z",
            text: emb!("zheng_z.fct").to_owned(),
            description: "Zheng's balanced 2-neighborly 3-sphere",
            f_vector: Some(vec![16, 96, 160, 80]),
            closed: true,
            realizable: Some(false),
        },
        Dataset {
            name: "prismatoid-1039",
            text: emb!("prismatoid_1039.fct").to_owned(),
            description: "simplicial facets of topological prismatoid #1039",
            f_vector: None,
            closed: false,
            realizable: Some(false),
        },
        Dataset {
            name: "prismatoid-1963",
            text: emb!("prismatoid_1963.fct").to_owned(),
            description: "simplicial facets of topological prismatoid #1963",
            f_vector: None,
            closed: false,
            realizable: Some(false),
        },
        Dataset {
            name: "prismatoid-2669",
            text: emb!("prismatoid_2669.fct").to_owned(),
            description: "simplicial facets of topological prismatoid #2669",
            f_vector: None,
            closed: false,
            realizable: Some(false),
        },
        Dataset {
            name: "prismatoid-3513",
            text: emb!("prismatoid_3513.fct").to_owned(),
            description: "simplicial facets of topological prismatoid #3513",
            f_vector: None,
            closed: false,
            realizable: Some(false),
        },
        Dataset {
            name: "boundary-P",
            text: emb!("boundary_p.fct").to_owned(),
            description: "realizable 3-sphere: boundary of conv(cross-polytope and +-(1,1,1,1))",
            f_vector: Some(vec![10, 40, 60, 30]),
            closed: true,
            realizable: Some(true),
        },
        Dataset {
            name: "cross-polytope-4",
            text: cross_polytope_boundary(4),
            description: "boundary of the 4-dimensional cross-polytope",
            f_vector: Some(vec![8, 24, 32, 16]),
            closed: true,
            realizable: Some(true),
        },
        Dataset {
            name: "cyclic-4-8",
            text: cyclic_polytope_boundary(4, 8),
            description: "boundary of the cyclic polytope C(4,8)",
            f_vector: None,
            closed: true,
            realizable: Some(true),
        },
        Dataset {
            name: "klein-bottle",
            text: klein_bottle(),
            description: "9-vertex triangulation of the Klein bottle (non-orientable control)",
            f_vector: Some(vec![9, 27, 18]),
            closed: true,
            realizable: None,
        },
    ]
}

pub fn dataset(name: &str) -> Result<Dataset, DatasetError> {
    catalog()
        .into_iter()
        .find(|d| d.name == name)
        .ok_or_else(|| DatasetError::Unknown(name.to_owned()))
}

/// Realizable control datasets for soundness runs.
pub fn controls() -> Vec<Dataset> {
    ["boundary-P", "cross-polytope-4", "cyclic-4-8"]
        .iter()
        .map(|n| dataset(n).expect("catalog entry"))
        .collect()
}

/// Forbidden-facet lists shipped alongside datasets, as facet-file text to
/// be parsed against the dataset's vertex table.
pub fn forbidden_list(name: &str) -> Result<&'static str, DatasetError> {
    match name {
        "jockusch-d3-6" => Ok(emb!("forbidden_b3_6.fct")),
        "novik-zheng-d4-7" => Ok(emb!("forbidden_b4_7.fct")),
        other => Err(DatasetError::Unknown(other.to_owned())),
    }
}

/// Parses a forbidden-facet file against an existing complex: every line
/// must name a facet using the complex's vertex tokens.
pub fn parse_forbidden(
    cx: &OrientedComplex,
    text: &str,
) -> Result<Vec<Vec<Vertex>>, ComplexError> {
    let mut out = Vec::new();
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let toks = if toks[0] == "+" || toks[0] == "-" {
            &toks[1..]
        } else {
            &toks[..]
        };
        let mut f = toks
            .iter()
            .map(|t| cx.vertices().lookup(t))
            .collect::<Result<Vec<_>, _>>()?;
        f.sort_unstable();
        out.push(f);
    }
    Ok(out)
}
