//! Resolution of the shipped certificate trees against a concrete complex,
//! including reconstruction of edge data the sources leave implicit.

use itertools::Itertools;

use super::refcerts::*;
use crate::complex::ComplexError;
use crate::gpgraph::{signs_opposable, tree_candidate_check, TreeSelection};
use crate::plucker::{make_relation, CertPolynomial, Relation};
use crate::solids::{SolidId, SolidTable};
use crate::Vertex;

/// The shipped certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefCert {
    Example,
    JockuschD36,
    Zheng,
    Prismatoid1039,
    Prismatoid1963,
    Prismatoid2669,
    Prismatoid3513,
    /// The forbidden-facet certificate carrying the Δ³ₙ family induction.
    JockuschFamily,
    /// The 28-relation tree for Δ⁴₇.
    NovikZheng47,
}

impl RefCert {
    pub fn all() -> [RefCert; 9] {
        [
            RefCert::Example,
            RefCert::JockuschD36,
            RefCert::Zheng,
            RefCert::Prismatoid1039,
            RefCert::Prismatoid1963,
            RefCert::Prismatoid2669,
            RefCert::Prismatoid3513,
            RefCert::JockuschFamily,
            RefCert::NovikZheng47,
        ]
    }

    /// Catalog dataset the certificate belongs to; `None` for the generated
    /// Δ⁴₇ sphere.
    pub fn dataset_name(self) -> Option<&'static str> {
        match self {
            RefCert::Example => Some("example-1.1"),
            RefCert::JockuschD36 | RefCert::JockuschFamily => Some("jockusch-d3-6"),
            RefCert::Zheng => Some("zheng-Z"),
            RefCert::Prismatoid1039 => Some("prismatoid-1039"),
            RefCert::Prismatoid1963 => Some("prismatoid-1963"),
            RefCert::Prismatoid2669 => Some("prismatoid-2669"),
            RefCert::Prismatoid3513 => Some("prismatoid-3513"),
            RefCert::NovikZheng47 => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RefCert::Example => "example",
            RefCert::JockuschD36 => "jockusch-d3-6",
            RefCert::Zheng => "zheng",
            RefCert::Prismatoid1039 => "prismatoid-1039",
            RefCert::Prismatoid1963 => "prismatoid-1963",
            RefCert::Prismatoid2669 => "prismatoid-2669",
            RefCert::Prismatoid3513 => "prismatoid-3513",
            RefCert::JockuschFamily => "jockusch-family",
            RefCert::NovikZheng47 => "novik-zheng-d4-7",
        }
    }

    /// The forbidden-facet list the certificate must avoid, if any.
    pub fn forbidden_name(self) -> Option<&'static str> {
        match self {
            RefCert::JockuschFamily => Some("jockusch-d3-6"),
            RefCert::NovikZheng47 => Some("novik-zheng-d4-7"),
            _ => None,
        }
    }

    /// The published final polynomial, when one was printed.
    pub fn final_fixture(self) -> Option<&'static [&'static [&'static str]]> {
        match self {
            RefCert::Example => Some(EXAMPLE_FINAL),
            RefCert::JockuschD36 => Some(D36_FINAL),
            RefCert::Zheng => Some(ZHENG_FINAL),
            RefCert::Prismatoid1039 => Some(P1039_FINAL),
            RefCert::Prismatoid1963 => Some(P1963_FINAL),
            RefCert::Prismatoid2669 => Some(P2669_FINAL),
            RefCert::Prismatoid3513 => Some(P3513_FINAL),
            RefCert::JockuschFamily => Some(THMJ_FINAL),
            RefCert::NovikZheng47 => None,
        }
    }
}

pub fn reference_certificates() -> Vec<RefCert> {
    RefCert::all().to_vec()
}

fn toks_to_verts(st: &SolidTable, toks: &str) -> Result<Vec<Vertex>, ComplexError> {
    toks.split_whitespace()
        .map(|t| st.complex().vertices().lookup(t))
        .collect()
}

/// Resolves a token-level tree spec against a complex.
pub fn resolve_tree(st: &SolidTable, spec: &TreeSpec) -> Result<TreeSelection, String> {
    let mut nodes = Vec::new();
    for &(sign, s, quad) in spec.nodes {
        let s = toks_to_verts(st, s).map_err(|e| e.to_string())?;
        let quad_v = toks_to_verts(st, quad).map_err(|e| e.to_string())?;
        let quad: [Vertex; 4] = quad_v
            .try_into()
            .map_err(|_| "quad must have four vertices".to_owned())?;
        nodes.push(make_relation(st, &s, &quad, sign).map_err(|e| e.to_string())?);
    }
    let mut edges = Vec::new();
    for &(color, a, b) in spec.edges {
        let mut support = toks_to_verts(st, color).map_err(|e| e.to_string())?;
        support.sort_unstable();
        let id = st
            .id_of_support(&support)
            .ok_or_else(|| format!("edge color `{color}` is not a solid"))?;
        edges.push((id, a, b));
    }
    Ok(TreeSelection { nodes, edges })
}

/// Colors a tree whose node set (and optionally edge endpoints) are known
/// but whose edge colors are not: picks, by backtracking, shared solids
/// with opposable term signs so that every unknown solid of every node is
/// covered exactly once. With `endpoints = None` the endpoint pairs are
/// searched as well.
pub fn derive_edges(
    st: &SolidTable,
    nodes: &[Relation],
    endpoints: Option<&[(usize, usize)]>,
) -> Result<Vec<(SolidId, usize, usize)>, String> {
    let shared = |a: usize, b: usize| -> Vec<SolidId> {
        let ra = &nodes[a];
        let rb = &nodes[b];
        let mut out = Vec::new();
        for ta in &ra.terms {
            for &v in &[ta.a, ta.b] {
                if let Some(tb) = rb.term_with(v) {
                    if signs_opposable(ta.sigma, tb.sigma) && !out.contains(&v) {
                        out.push(v);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    };

    let pairs: Vec<(usize, usize)> = match endpoints {
        Some(e) => e.to_vec(),
        None => (0..nodes.len())
            .tuple_combinations()
            .filter(|&(a, b)| !shared(a, b).is_empty())
            .collect(),
    };
    let candidates: Vec<Vec<SolidId>> = pairs.iter().map(|&(a, b)| shared(a, b)).collect();
    let need_edges = nodes.len() - 1;

    // Demand table: each unknown solid of each node must end up covered
    // exactly once.
    let demands: Vec<Vec<SolidId>> = nodes.iter().map(|r| r.unknown_solids(st)).collect();

    struct Bt<'x> {
        pairs: &'x [(usize, usize)],
        candidates: &'x [Vec<SolidId>],
        demands: &'x [Vec<SolidId>],
        chosen: Vec<Option<SolidId>>,
        covered: Vec<Vec<bool>>,
        need_edges: usize,
        fixed_endpoints: bool,
    }

    impl Bt<'_> {
        fn solve(&mut self, pi: usize, used: usize) -> bool {
            if used > self.need_edges || used + (self.pairs.len() - pi) < self.need_edges {
                return false;
            }
            if pi == self.pairs.len() {
                return used == self.need_edges && self.all_covered() && self.is_tree();
            }
            for ci in 0..self.candidates[pi].len() {
                let color = self.candidates[pi][ci];
                let (a, b) = self.pairs[pi];
                let mut ok = true;
                let mut done_nodes = Vec::new();
                for &node in &[a, b] {
                    if let Some(di) = self.demands[node].iter().position(|&c| c == color) {
                        if self.covered[node][di] {
                            ok = false;
                            break;
                        }
                        self.covered[node][di] = true;
                        done_nodes.push((node, di));
                    }
                }
                if ok {
                    self.chosen[pi] = Some(color);
                    if self.solve(pi + 1, used + 1) {
                        return true;
                    }
                    self.chosen[pi] = None;
                }
                for (node, di) in done_nodes {
                    self.covered[node][di] = false;
                }
            }
            // Leaving the pair unused is only meaningful when the endpoint
            // pairs are being searched; fixed endpoints are all edges.
            if !self.fixed_endpoints {
                return self.solve(pi + 1, used);
            }
            false
        }

        fn all_covered(&self) -> bool {
            self.covered.iter().all(|v| v.iter().all(|&c| c))
        }

        fn is_tree(&self) -> bool {
            let n = self.demands.len();
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            let mut merged = 0;
            for (pi, ch) in self.chosen.iter().enumerate() {
                if ch.is_none() {
                    continue;
                }
                let (a, b) = self.pairs[pi];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    return false;
                }
                parent[ra] = rb;
                merged += 1;
            }
            merged == n - 1
        }
    }

    let mut bt = Bt {
        pairs: &pairs,
        candidates: &candidates,
        demands: &demands,
        chosen: vec![None; pairs.len()],
        covered: demands.iter().map(|d| vec![false; d.len()]).collect(),
        need_edges,
        fixed_endpoints: endpoints.is_some(),
    };
    if !bt.solve(0, 0) {
        return Err("no consistent edge coloring found".to_owned());
    }
    let edges: Vec<(SolidId, usize, usize)> = bt
        .chosen
        .iter()
        .zip(&pairs)
        .filter_map(|(c, &(a, b))| c.map(|color| (color, a, b)))
        .collect();
    Ok(edges)
}

/// Resolves the full tree of a shipped certificate, deriving edges where
/// the source leaves them implicit, and validates it.
pub fn tree_for(st: &SolidTable, cert: RefCert) -> Result<TreeSelection, String> {
    let sel = match cert {
        RefCert::Example => resolve_tree(st, &EXAMPLE_TREE)?,
        RefCert::JockuschD36 => resolve_tree(st, &D36_TREE)?,
        RefCert::Zheng => resolve_tree(st, &ZHENG_TREE)?,
        RefCert::Prismatoid1039 => resolve_tree(st, &P1039_TREE)?,
        RefCert::Prismatoid1963 => resolve_tree(st, &P1963_TREE)?,
        RefCert::Prismatoid2669 => resolve_tree(st, &P2669_TREE)?,
        RefCert::Prismatoid3513 => resolve_tree(st, &P3513_TREE)?,
        RefCert::JockuschFamily => {
            let base = resolve_tree(st, &THMJ_NODES)?;
            let edges = derive_edges(st, &base.nodes, None)?;
            TreeSelection {
                nodes: base.nodes,
                edges,
            }
        }
        RefCert::NovikZheng47 => {
            let base = resolve_tree(st, &NZ47_NODES)?;
            let edges = derive_edges(st, &base.nodes, Some(NZ47_EDGE_ENDPOINTS))?;
            TreeSelection {
                nodes: base.nodes,
                edges,
            }
        }
    };
    tree_candidate_check(st, &sel)?;
    Ok(sel)
}

/// Canonicalizes a published final polynomial (unit-coefficient bracket
/// monomials) into ring form, normalizing the reflection-induced global
/// sign.
pub fn resolve_final(
    st: &SolidTable,
    monomials: &[&[&str]],
) -> Result<CertPolynomial, ComplexError> {
    let mut fixture: Vec<(i64, Vec<Vec<Vertex>>)> = Vec::new();
    for mono in monomials {
        let mut seqs = Vec::new();
        for bracket in *mono {
            seqs.push(
                bracket
                    .split_whitespace()
                    .map(|t| st.complex().vertices().lookup(t))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        fixture.push((1, seqs));
    }
    let p = crate::certificate::poly_from_bracket_monomials(st, &fixture)
        .map_err(|e| ComplexError::NotASolid(e.to_string()))?;
    Ok(if p.all_negative() { p.neg() } else { p })
}
