//! Normal-form calculus for oriented solids.
//!
//! A solid is a (d+1)-subset of the vertex set; in any convex realization
//! its determinant sign is forced as soon as the solid contains a facet of
//! the complex. The normal form orders a known solid facet-first (with the
//! last two facet vertices swapped when the facet is negatively oriented)
//! so that its determinant may be assumed positive; unknown solids are kept
//! in ascending order and carry an indeterminate sign.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Mul, Neg};

use itertools::Itertools;

use crate::complex::{ComplexError, OrientedComplex};
pub use crate::complex::permutation_signature;
use crate::Vertex;

/// Index into a [`SolidTable`].
pub type SolidId = u32;

/// Sign of a solid's determinant value: definite or indeterminate.
/// Products with an indeterminate factor stay indeterminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FuzzySign {
    Plus,
    Minus,
    Unknown,
}

impl FuzzySign {
    pub fn from_i8(s: i8) -> Self {
        if s >= 0 {
            FuzzySign::Plus
        } else {
            FuzzySign::Minus
        }
    }

    pub fn is_known(self) -> bool {
        self != FuzzySign::Unknown
    }
}

impl Mul for FuzzySign {
    type Output = FuzzySign;
    fn mul(self, rhs: FuzzySign) -> FuzzySign {
        use FuzzySign::*;
        match (self, rhs) {
            (Unknown, _) | (_, Unknown) => Unknown,
            (Plus, Plus) | (Minus, Minus) => Plus,
            _ => Minus,
        }
    }
}

impl Neg for FuzzySign {
    type Output = FuzzySign;
    fn neg(self) -> FuzzySign {
        match self {
            FuzzySign::Plus => FuzzySign::Minus,
            FuzzySign::Minus => FuzzySign::Plus,
            FuzzySign::Unknown => FuzzySign::Unknown,
        }
    }
}

impl fmt::Display for FuzzySign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzySign::Plus => write!(f, "+"),
            FuzzySign::Minus => write!(f, "-"),
            FuzzySign::Unknown => write!(f, "?"),
        }
    }
}

/// A solid in normal form. `key` (the sorted support) is the identity of
/// the corresponding certificate-ring variable; `verts` is the canonical
/// vertex order defining the sign convention of its determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSolid {
    pub verts: Vec<Vertex>,
    pub known: bool,
    pub det_facet: Option<Vec<Vertex>>,
    pub assoc_vertex: Option<Vertex>,
    pub key: Vec<Vertex>,
}

#[derive(Debug, Clone)]
pub(crate) struct SolidInfo {
    pub support: Vec<Vertex>,
    pub known: bool,
    pub det_facet: Option<u32>,
    pub assoc_vertex: Option<Vertex>,
    /// Normal-form vertex sequence.
    pub nf: Vec<Vertex>,
    /// Signature of `nf` relative to ascending order.
    pub eps_nf: i8,
}

/// Precomputed table of every (d+1)-subset of the vertex set of a complex,
/// each with its normal form. Forbidden facets are excluded from the
/// determining-facet candidates, demoting solids they alone determine to
/// unknown.
pub struct SolidTable<'cx> {
    cx: &'cx OrientedComplex,
    forbidden: BTreeSet<Vec<Vertex>>,
    solids: Vec<SolidInfo>,
    ids: HashMap<Vec<Vertex>, SolidId>,
}

impl<'cx> SolidTable<'cx> {
    pub fn new(
        cx: &'cx OrientedComplex,
        forbidden: &[Vec<Vertex>],
    ) -> Result<Self, ComplexError> {
        let mut fset = BTreeSet::new();
        for f in forbidden {
            let mut f = f.clone();
            f.sort_unstable();
            if !cx.complex().is_facet(&f) {
                return Err(ComplexError::NoSuchFacet(cx.vertices().render_seq(&f)));
            }
            fset.insert(f);
        }
        let n = cx.n();
        let k = cx.d() + 1;
        let mut solids = Vec::new();
        let mut ids = HashMap::new();
        for support in (0..n as Vertex).combinations(k) {
            let info = Self::classify(cx, &fset, &support);
            ids.insert(support, solids.len() as SolidId);
            solids.push(info);
        }
        Ok(Self {
            cx,
            forbidden: fset,
            solids,
            ids,
        })
    }

    fn classify(
        cx: &OrientedComplex,
        forbidden: &BTreeSet<Vec<Vertex>>,
        support: &[Vertex],
    ) -> SolidInfo {
        let k = support.len();
        // Dropping a later vertex yields a lexicographically smaller facet,
        // so scan from the back for the smallest determining facet.
        for drop in (0..k).rev() {
            let facet: Vec<Vertex> = support
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, &v)| v)
                .collect();
            if forbidden.contains(&facet) {
                continue;
            }
            let Some(fid) = cx.complex().facet_id(&facet) else {
                continue;
            };
            let alpha = support[drop];
            let mut nf = facet.clone();
            if cx.omega_of(fid) < 0 {
                let d = nf.len();
                nf.swap(d - 2, d - 1);
            }
            nf.push(alpha);
            let eps_nf = permutation_signature(&nf).expect("distinct vertices");
            return SolidInfo {
                support: support.to_vec(),
                known: true,
                det_facet: Some(fid),
                assoc_vertex: Some(alpha),
                nf,
                eps_nf,
            };
        }
        SolidInfo {
            support: support.to_vec(),
            known: false,
            det_facet: None,
            assoc_vertex: None,
            nf: support.to_vec(),
            eps_nf: 1,
        }
    }

    pub fn complex(&self) -> &'cx OrientedComplex {
        self.cx
    }

    pub fn forbidden(&self) -> &BTreeSet<Vec<Vertex>> {
        &self.forbidden
    }

    pub fn len(&self) -> usize {
        self.solids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solids.is_empty()
    }

    pub fn id_of_support(&self, support_sorted: &[Vertex]) -> Option<SolidId> {
        self.ids.get(support_sorted).copied()
    }

    pub fn known(&self, id: SolidId) -> bool {
        self.solids[id as usize].known
    }

    pub fn support(&self, id: SolidId) -> &[Vertex] {
        &self.solids[id as usize].support
    }

    pub fn nf_seq(&self, id: SolidId) -> &[Vertex] {
        &self.solids[id as usize].nf
    }

    pub fn det_facet(&self, id: SolidId) -> Option<&[Vertex]> {
        self.solids[id as usize]
            .det_facet
            .map(|fid| self.cx.facets()[fid as usize].as_slice())
    }

    /// Resolves an oriented vertex sequence to its ring variable and the
    /// exact ±1 relating the sequence to the normal form: as ring elements,
    /// `seq = factor · nf`.
    pub fn resolve_seq(&self, seq: &[Vertex]) -> Result<(SolidId, i8), ComplexError> {
        let eps = permutation_signature(seq)?;
        let mut support = seq.to_vec();
        support.sort_unstable();
        let id = self
            .id_of_support(&support)
            .ok_or_else(|| ComplexError::NotASolid(self.cx.vertices().render_seq(seq)))?;
        Ok((id, eps * self.solids[id as usize].eps_nf))
    }

    /// The sign relating an oriented solid to its normal form, when its
    /// determinant sign is controlled at all.
    pub fn chi_seq(&self, seq: &[Vertex]) -> Result<FuzzySign, ComplexError> {
        let (id, factor) = self.resolve_seq(seq)?;
        Ok(if self.known(id) {
            FuzzySign::from_i8(factor)
        } else {
            FuzzySign::Unknown
        })
    }

    /// Normal form of an oriented solid, plus its χ sign.
    pub fn normal_form(&self, seq: &[Vertex]) -> Result<(NormalSolid, FuzzySign), ComplexError> {
        let (id, _) = self.resolve_seq(seq)?;
        let info = &self.solids[id as usize];
        let chi = self.chi_seq(seq)?;
        Ok((
            NormalSolid {
                verts: info.nf.clone(),
                known: info.known,
                det_facet: info
                    .det_facet
                    .map(|fid| self.cx.facets()[fid as usize].clone()),
                assoc_vertex: info.assoc_vertex,
                key: info.support.clone(),
            },
            chi,
        ))
    }

    /// Every facet inside the support that may determine the solid.
    pub fn determining_facets(&self, id: SolidId) -> Vec<Vec<Vertex>> {
        let support = &self.solids[id as usize].support;
        let mut out = Vec::new();
        for drop in 0..support.len() {
            let facet: Vec<Vertex> = support
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, &v)| v)
                .collect();
            if self.cx.complex().is_facet(&facet) && !self.forbidden.contains(&facet) {
                out.push(facet);
            }
        }
        out.sort();
        out
    }

    /// Signature of the normal form built from a specific determining facet.
    fn eps_via(&self, id: SolidId, facet: &[Vertex]) -> i8 {
        let support = &self.solids[id as usize].support;
        let alpha = *support
            .iter()
            .find(|v| !facet.contains(v))
            .expect("facet is a proper subset of the support");
        let fid = self.cx.complex().facet_id(facet).expect("determining facet");
        let mut nf = facet.to_vec();
        if self.cx.omega_of(fid) < 0 {
            let d = nf.len();
            nf.swap(d - 2, d - 1);
        }
        nf.push(alpha);
        permutation_signature(&nf).expect("distinct vertices")
    }

    /// True iff every choice of determining facet yields the same
    /// normal-form signature. Holds for every solid of an oriented
    /// pseudomanifold; exercised exhaustively by the property suite.
    pub fn well_definedness_check(&self, id: SolidId) -> bool {
        let facets = self.determining_facets(id);
        if facets.len() < 2 {
            return true;
        }
        let first = self.eps_via(id, &facets[0]);
        facets.iter().all(|f| self.eps_via(id, f) == first)
    }

    /// Renders a solid in bracket notation, `[.. a b|c]` when known via a
    /// facet and `[..]^?` when unknown.
    pub fn render(&self, id: SolidId) -> String {
        let info = &self.solids[id as usize];
        let vt = self.cx.vertices();
        if info.known {
            let d = info.nf.len() - 1;
            format!(
                "[{}|{}]",
                vt.render_seq(&info.nf[..d]),
                vt.label(info.nf[d])
            )
        } else {
            format!("[{}]^?", vt.render_seq(&info.nf))
        }
    }

    /// Bracket rendering without the facet separator, matching how solids
    /// appear inside relation terms.
    pub fn render_plain(&self, id: SolidId) -> String {
        let info = &self.solids[id as usize];
        let body = self.cx.vertices().render_seq(&info.nf);
        if info.known {
            format!("[{body}]")
        } else {
            format!("[{body}]^?")
        }
    }
}
