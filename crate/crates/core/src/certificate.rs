//! Tree elimination into the final polynomial, positivity checking, and
//! independent certificate verification.
//!
//! Eliminating an edge colored `[A]` between polynomials P1 and P2 with
//! A-cofactors C1, C2 forms (-C2)·P1 + C1·P2, which is free of `[A]`
//! regardless of sign bookkeeping. The final polynomial of a tree does not
//! depend on the edge order; a certificate is the tree plus its eliminated
//! polynomial, every monomial of which must be a positive product of
//! known-positive normal forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Num, One, Signed, Zero};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{check_cycle, Complex, ComplexError, OrientedComplex};
use crate::gpgraph::{tree_candidate_check, TreeSelection};
use crate::plucker::{
    make_relation, CertPolynomial, Monomial, PointConfiguration, RingError,
};
use crate::solids::{SolidId, SolidTable};
use crate::Vertex;

#[derive(Debug, Error)]
pub enum CertError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("edge {0} closes a cycle; not a tree")]
    CycleEdge(usize),
    #[error("elimination left the color variable behind")]
    ResidualColor,
    #[error("certificate file is inconsistent: {0}")]
    BadFile(String),
}

/// Elimination of one edge: (-C2)·P1 + C1·P2 where Ci is the cofactor of
/// the color variable in Pi. Errors when the color is absent from either
/// polynomial or occurs nonlinearly.
pub fn eliminate_edge(
    p1: &CertPolynomial,
    p2: &CertPolynomial,
    color: SolidId,
) -> Result<CertPolynomial, CertError> {
    let (c1, _) = p1.coefficient_of(color)?;
    let (c2, _) = p2.coefficient_of(color)?;
    let out = p2.mul(&c1).add(&p1.mul(&c2).neg());
    if out.contains_var(color) {
        return Err(CertError::ResidualColor);
    }
    Ok(out)
}

/// The eliminated certificate: final polynomial plus the trace expressing
/// it as Σ κ_m · Γ_m over the tree's relations.
#[derive(Debug, Clone)]
pub struct Eliminated {
    pub final_poly: CertPolynomial,
    pub kappas: Vec<CertPolynomial>,
}

/// Eliminates every edge of the tree, in the given edge order (indices into
/// `tree.edges`), default order when `None`.
///
/// Each edge (A, {u, v}) cancels the A-term of relation u against the
/// A-term of relation v: the u-side is multiplied by the κ-scaled partner
/// of v's A-term and vice versa, with the sign fixing exact cancellation.
/// Anchoring the cancellation to the endpoint relations (rather than to
/// the full cofactor of x_A) keeps every order exact even when two edges
/// of the tree carry the same color, which exact unknown-coverage permits.
/// The result does not depend on the order. The global sign is normalized:
/// orientation is only fixed up to a reflection, so an all-negative final
/// polynomial is negated together with its trace.
pub fn evaluate_tree(
    tree: &TreeSelection,
    order: Option<&[usize]>,
) -> Result<Eliminated, CertError> {
    let n = tree.nodes.len();
    let default_order: Vec<usize> = (0..tree.edges.len()).collect();
    let order = order.unwrap_or(&default_order);

    // Union-find over tree nodes; each component carries the κ coefficient
    // of every original relation it has absorbed, so its polynomial is
    // Σ κ_m·Γ_m without being materialized.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut kappa: Vec<BTreeMap<usize, CertPolynomial>> = (0..n)
        .map(|i| {
            let mut m = BTreeMap::new();
            let mut one = CertPolynomial::zero();
            one.add_term(Monomial::one(), BigInt::one());
            m.insert(i, one);
            m
        })
        .collect();

    for &ei in order {
        let (color, u, v) = tree.edges[ei];
        let ru = find(&mut parent, u);
        let rv = find(&mut parent, v);
        if ru == rv {
            return Err(CertError::CycleEdge(ei));
        }
        // κ-scaled partner of the color term in each endpoint relation.
        let scaled_partner = |node: usize,
                              kappas: &BTreeMap<usize, CertPolynomial>|
         -> Result<CertPolynomial, CertError> {
            let term = tree.nodes[node]
                .term_with(color)
                .ok_or(CertError::ResidualColor)?;
            let partner = term.partner(color).expect("term contains the color");
            let k = kappas.get(&node).expect("node in its component");
            Ok(k.scale_monomial(&Monomial::var(partner), &BigInt::from(term.coeff)))
        };
        // The component holding the smallest original node index plays the
        // role of the standing polynomial; the other side is folded in.
        let min_u = *kappa[ru].keys().next().unwrap();
        let min_v = *kappa[rv].keys().next().unwrap();
        let (main, leaf, main_node, leaf_node) = if min_u <= min_v {
            (ru, rv, u, v)
        } else {
            (rv, ru, v, u)
        };
        let c_main = scaled_partner(main_node, &kappa[main])?;
        let c_leaf = scaled_partner(leaf_node, &kappa[leaf])?;
        let leaf_kappas = std::mem::take(&mut kappa[leaf]);
        let main_kappas = std::mem::take(&mut kappa[main]);
        let mut merged = BTreeMap::new();
        for (m, k) in main_kappas {
            merged.insert(m, k.mul(&c_leaf).neg());
        }
        for (m, k) in leaf_kappas {
            merged.insert(m, k.mul(&c_main));
        }
        parent[leaf] = main;
        kappa[main] = merged;
    }

    let root = find(&mut parent, 0);
    let mut kappas: Vec<CertPolynomial> = (0..n)
        .map(|i| kappa[root].get(&i).cloned().unwrap_or_default())
        .collect();
    let mut final_poly = CertPolynomial::zero();
    for (rel, k) in tree.nodes.iter().zip(&kappas) {
        final_poly = final_poly.add(&CertPolynomial::from_relation(rel).mul(k));
    }
    if final_poly.all_negative() {
        final_poly = final_poly.neg();
        for k in &mut kappas {
            *k = k.neg();
        }
    }
    Ok(Eliminated { final_poly, kappas })
}

/// Positivity of a monomial's value: positive coefficient, and every
/// variable of odd multiplicity known (squares of unknowns contribute a
/// positive value regardless of the unknown sign).
#[derive(Debug, Clone)]
pub enum Positivity {
    Positive(PositivityWitness),
    Fail { reason: String },
}

impl Positivity {
    pub fn is_positive(&self) -> bool {
        matches!(self, Positivity::Positive(_))
    }
}

/// Per-monomial justification: the determining facet of every variable of
/// odd multiplicity.
#[derive(Debug, Clone)]
pub struct PositivityWitness {
    pub monomials: Vec<MonomialWitness>,
    /// Set when some unknown solid occurs to an even power (its square has
    /// positive value whatever the sign); the shipped certificates never
    /// need this relaxation.
    pub used_even_power_relaxation: bool,
}

#[derive(Debug, Clone)]
pub struct MonomialWitness {
    pub coeff: BigInt,
    pub solids: Vec<(SolidId, Option<Vec<Vertex>>)>,
}

pub fn positivity_check(st: &SolidTable, p: &CertPolynomial) -> Positivity {
    if p.is_zero() {
        return Positivity::Fail {
            reason: "zero polynomial is vacuous".to_owned(),
        };
    }
    let mut monomials = Vec::new();
    let mut relaxed = false;
    for (m, c) in p.terms() {
        if !c.is_positive() {
            return Positivity::Fail {
                reason: format!("monomial with non-positive coefficient {c}"),
            };
        }
        let mut solids = Vec::new();
        let mut vars = m.vars().to_vec();
        vars.dedup();
        for v in vars {
            let mult = m.multiplicity(v);
            if st.known(v) {
                solids.push((v, st.det_facet(v).map(|f| f.to_vec())));
            } else if mult % 2 == 0 {
                relaxed = true;
                solids.push((v, None));
            } else {
                return Positivity::Fail {
                    reason: format!(
                        "unknown solid {} occurs to an odd power",
                        st.render(v)
                    ),
                };
            }
        }
        monomials.push(MonomialWitness {
            coeff: c.clone(),
            solids,
        });
    }
    Positivity::Positive(PositivityWitness {
        monomials,
        used_even_power_relaxation: relaxed,
    })
}

/// A certificate ready for verification or serialization.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub tree: TreeSelection,
    pub final_poly: CertPolynomial,
    pub kappas: Vec<CertPolynomial>,
}

impl Certificate {
    pub fn from_tree(tree: TreeSelection) -> Result<Self, CertError> {
        let elim = evaluate_tree(&tree, None)?;
        Ok(Self {
            tree,
            final_poly: elim.final_poly,
            kappas: elim.kappas,
        })
    }
}

// ---------------------------------------------------------------------------
// Serialized form
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexRef {
    pub name: String,
    pub hash: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrientedFacetSpec {
    pub facet: Vec<String>,
    pub sign: i8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodeSpec {
    pub s: Vec<String>,
    pub quad: Vec<String>,
    pub sign: i8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub color: Vec<String>,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonomialSpec {
    pub coeff: String,
    /// Normal-form vertex sequences, one per factor, with multiplicity.
    pub monomial: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetaSpec {
    pub tool: String,
    pub seed: u64,
    pub solver: String,
}

/// On-disk certificate: the tree, the expanded final polynomial, the
/// orientation it was computed under, and provenance metadata. Verification
/// recomputes everything rather than trusting the stored polynomial.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateFile {
    pub complex: ComplexRef,
    pub orientation: Vec<OrientedFacetSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<Vec<Vec<String>>>,
    pub nodes: Vec<NodeSpec>,
    pub edges: Vec<EdgeSpec>,
    #[serde(rename = "final")]
    pub final_polynomial: Vec<MonomialSpec>,
    pub meta: MetaSpec,
}

impl CertificateFile {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, CertError> {
        serde_json::from_str(text).map_err(|e| CertError::BadFile(e.to_string()))
    }

    /// Serializes a runtime certificate against its complex.
    pub fn from_certificate(
        st: &SolidTable,
        cert: &Certificate,
        complex_name: &str,
        complex_hash: &str,
        forbidden: Option<Vec<Vec<String>>>,
        meta: MetaSpec,
    ) -> Self {
        let cx = st.complex();
        let vt = cx.vertices();
        let toks = |seq: &[Vertex]| -> Vec<String> {
            seq.iter().map(|&v| vt.label(v).to_owned()).collect()
        };
        let orientation = cx
            .facets()
            .iter()
            .zip(cx.omega())
            .map(|(f, &s)| OrientedFacetSpec {
                facet: toks(f),
                sign: s,
            })
            .collect();
        let nodes = cert
            .tree
            .nodes
            .iter()
            .map(|r| NodeSpec {
                s: toks(&r.s),
                quad: toks(&r.quad),
                sign: r.sign,
            })
            .collect();
        let edges = cert
            .tree
            .edges
            .iter()
            .map(|&(color, a, b)| EdgeSpec {
                color: toks(st.support(color)),
                a,
                b,
            })
            .collect();
        let final_polynomial = cert
            .final_poly
            .terms()
            .map(|(m, c)| MonomialSpec {
                coeff: c.to_string(),
                monomial: m.vars().iter().map(|&v| toks(st.nf_seq(v))).collect(),
            })
            .collect();
        CertificateFile {
            complex: ComplexRef {
                name: complex_name.to_owned(),
                hash: complex_hash.to_owned(),
            },
            orientation,
            forbidden,
            nodes,
            edges,
            final_polynomial,
            meta,
        }
    }

    /// Rebuilds the tree selection against a solid table.
    pub fn tree(&self, st: &SolidTable) -> Result<TreeSelection, CertError> {
        let vt = st.complex().vertices();
        let resolve = |toks: &[String]| -> Result<Vec<Vertex>, CertError> {
            toks.iter()
                .map(|t| vt.lookup(t).map_err(CertError::from))
                .collect()
        };
        let mut nodes = Vec::new();
        for n in &self.nodes {
            let s = resolve(&n.s)?;
            let quad_v = resolve(&n.quad)?;
            let quad: [Vertex; 4] = quad_v
                .try_into()
                .map_err(|_| CertError::BadFile("quad must have four vertices".into()))?;
            nodes.push(make_relation(st, &s, &quad, n.sign)?);
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            let mut support = resolve(&e.color)?;
            support.sort_unstable();
            let color = st.id_of_support(&support).ok_or_else(|| {
                CertError::BadFile(format!("edge color {:?} is not a solid", e.color))
            })?;
            if e.a >= nodes.len() || e.b >= nodes.len() {
                return Err(CertError::BadFile("edge endpoint out of range".into()));
            }
            edges.push((color, e.a, e.b));
        }
        Ok(TreeSelection { nodes, edges })
    }

    /// Parses the stored final polynomial into ring form.
    pub fn stored_final(&self, st: &SolidTable) -> Result<CertPolynomial, CertError> {
        let vt = st.complex().vertices();
        let mut p = CertPolynomial::zero();
        for mono in &self.final_polynomial {
            let coeff = BigInt::from_str_radix(&mono.coeff, 10)
                .map_err(|e| CertError::BadFile(format!("bad coefficient: {e}")))?;
            let mut vars = Vec::new();
            let mut factor = BigInt::one();
            for seq_toks in &mono.monomial {
                let seq: Vec<Vertex> = seq_toks
                    .iter()
                    .map(|t| vt.lookup(t))
                    .collect::<Result<_, _>>()?;
                let (id, f) = st.resolve_seq(&seq)?;
                vars.push(id);
                factor *= BigInt::from(f);
            }
            p.add_term(Monomial::from_vars(vars), coeff * factor);
        }
        Ok(p)
    }
}

/// Builds a ring polynomial from bracket monomials given as oriented vertex
/// sequences with integer coefficients.
pub fn poly_from_bracket_monomials(
    st: &SolidTable,
    monomials: &[(i64, Vec<Vec<Vertex>>)],
) -> Result<CertPolynomial, CertError> {
    let mut p = CertPolynomial::zero();
    for (coeff, seqs) in monomials {
        let mut vars = Vec::new();
        let mut factor = BigInt::from(*coeff);
        for seq in seqs {
            let (id, f) = st.resolve_seq(seq)?;
            vars.push(id);
            factor *= BigInt::from(f);
        }
        p.add_term(Monomial::from_vars(vars), factor);
    }
    Ok(p)
}

/// Equality after normalizing the global sign of both sides (an orientation
/// reflection negates every odd-degree monomial).
pub fn eq_up_to_global_sign(a: &CertPolynomial, b: &CertPolynomial) -> bool {
    a == b || *a == b.neg()
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, result: Result<String, String>) {
        match result {
            Ok(detail) => self.checks.push(CheckResult {
                name,
                passed: true,
                detail,
            }),
            Err(detail) => self.checks.push(CheckResult {
                name,
                passed: false,
                detail,
            }),
        }
    }
}

/// Number of random configurations used by the numeric vanishing check.
pub const VANISHING_TRIALS: usize = 10;

/// Runs the full verification of a certificate file against a facet file:
/// the content hash and stored orientation are validated, then (a) tree
/// validity, (b) re-elimination reproduces the stored polynomial, (c)
/// positivity, (d) the trace identity Z = Σ κ_m Γ_m, (e) exact numeric
/// vanishing on random rational configurations, and (f) no surviving solid
/// depends on a forbidden facet. Failures are reported, never panicked.
pub fn verify(facet_text: &str, file: &CertificateFile, seed: u64) -> VerificationReport {
    let mut report = VerificationReport { checks: Vec::new() };

    let hash = crate::content_hash(facet_text);
    if hash == file.complex.hash {
        report.push("complex", Ok(format!("content hash {hash} matches")));
    } else {
        report.push(
            "complex",
            Err(format!(
                "facet file hash {hash} differs from stored {}",
                file.complex.hash
            )),
        );
    }

    let complex = match Complex::from_text(facet_text) {
        Ok((cx, _)) => cx,
        Err(e) => {
            report.push("orientation", Err(format!("facet file unreadable: {e}")));
            return report;
        }
    };
    let cx = match adopt_orientation(&complex, file) {
        Ok(oc) => {
            report.push(
                "orientation",
                Ok("stored signs form a top-dimensional cycle".to_owned()),
            );
            oc
        }
        Err(e) => {
            report.push("orientation", Err(e));
            return report;
        }
    };
    verify_oriented(&cx, file, seed, report)
}

/// Rebuilds the oriented complex from the orientation stored in a
/// certificate file.
pub fn adopt_orientation(
    complex: &Complex,
    file: &CertificateFile,
) -> Result<OrientedComplex, String> {
    if file.orientation.len() != complex.facets().len() {
        return Err(format!(
            "stored orientation covers {} facets, complex has {}",
            file.orientation.len(),
            complex.facets().len()
        ));
    }
    let mut omega = vec![0i8; complex.facets().len()];
    for spec in &file.orientation {
        let mut facet = Vec::with_capacity(spec.facet.len());
        for tok in &spec.facet {
            match complex.vertices().lookup(tok) {
                Ok(v) => facet.push(v),
                Err(e) => return Err(format!("stored facet has unknown vertex: {e}")),
            }
        }
        let eps = match crate::complex::permutation_signature(&facet) {
            Ok(e) => e,
            Err(e) => return Err(format!("stored facet malformed: {e}")),
        };
        facet.sort_unstable();
        let Some(fid) = complex.facet_id(&facet) else {
            return Err(format!("stored facet {:?} not in the complex", spec.facet));
        };
        if omega[fid as usize] != 0 {
            return Err(format!("stored facet {:?} listed twice", spec.facet));
        }
        if spec.sign != 1 && spec.sign != -1 {
            return Err("stored sign must be +1 or -1".to_owned());
        }
        omega[fid as usize] = spec.sign * eps;
    }
    if !check_cycle(complex, &omega) {
        return Err("stored signs do not form a cycle on interior ridges".to_owned());
    }
    OrientedComplex::with_orientation(complex.clone(), omega).map_err(|e| e.to_string())
}

/// The verification core, once an oriented complex is fixed.
pub fn verify_oriented(
    cx: &OrientedComplex,
    file: &CertificateFile,
    seed: u64,
    mut report: VerificationReport,
) -> VerificationReport {
    // Forbidden facets parametrize knownness throughout.
    let forbidden: Vec<Vec<Vertex>> = match &file.forbidden {
        None => Vec::new(),
        Some(lists) => {
            let mut out = Vec::new();
            for toks in lists {
                match toks
                    .iter()
                    .map(|t| cx.vertices().lookup(t))
                    .collect::<Result<Vec<_>, _>>()
                {
                    Ok(mut f) => {
                        f.sort_unstable();
                        out.push(f);
                    }
                    Err(e) => {
                        report.push("forbidden", Err(format!("bad forbidden facet: {e}")));
                        return report;
                    }
                }
            }
            out
        }
    };
    let st = match SolidTable::new(cx, &forbidden) {
        Ok(st) => st,
        Err(e) => {
            report.push("forbidden", Err(format!("forbidden list rejected: {e}")));
            return report;
        }
    };

    // (a) tree validity.
    let tree = match file.tree(&st) {
        Ok(t) => t,
        Err(e) => {
            report.push("tree", Err(format!("cannot rebuild tree: {e}")));
            return report;
        }
    };
    match tree_candidate_check(&st, &tree) {
        Ok(()) => report.push(
            "tree",
            Ok(format!(
                "{} nodes, {} edges, unknown coverage exact",
                tree.nodes.len(),
                tree.edges.len()
            )),
        ),
        Err(e) => {
            report.push("tree", Err(e));
            return report;
        }
    }

    // (b) re-elimination reproduces the stored polynomial.
    let elim = match evaluate_tree(&tree, None) {
        Ok(e) => e,
        Err(e) => {
            report.push("elimination", Err(format!("elimination failed: {e}")));
            return report;
        }
    };
    match file.stored_final(&st) {
        Ok(stored) => {
            if stored == elim.final_poly {
                report.push(
                    "elimination",
                    Ok(format!(
                        "re-eliminated polynomial matches, {} monomials",
                        elim.final_poly.len()
                    )),
                );
            } else {
                report.push(
                    "elimination",
                    Err("stored final polynomial differs from re-elimination".to_owned()),
                );
            }
        }
        Err(e) => report.push(
            "elimination",
            Err(format!("stored polynomial unreadable: {e}")),
        ),
    }

    // (c) positivity.
    match positivity_check(&st, &elim.final_poly) {
        Positivity::Positive(w) => report.push(
            "positivity",
            Ok(format!(
                "{} positive monomials{}",
                w.monomials.len(),
                if w.used_even_power_relaxation {
                    " (even powers of unknown solids accepted)"
                } else {
                    ""
                }
            )),
        ),
        Positivity::Fail { reason } => report.push("positivity", Err(reason)),
    }

    // (d) trace identity Z = Σ κ_m Γ_m.
    {
        let mut expanded = CertPolynomial::zero();
        for (rel, kappa) in tree.nodes.iter().zip(&elim.kappas) {
            expanded = expanded.add(&CertPolynomial::from_relation(rel).mul(kappa));
        }
        if expanded == elim.final_poly {
            report.push(
                "identity",
                Ok("final polynomial equals the traced relation combination".to_owned()),
            );
        } else {
            report.push(
                "identity",
                Err("trace expansion does not reproduce the final polynomial".to_owned()),
            );
        }
    }

    // (e) exact numeric vanishing.
    {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut ok = true;
        for trial in 0..VANISHING_TRIALS {
            let x = PointConfiguration::random(cx.d() + 1, cx.n(), &mut rng);
            match elim.final_poly.evaluate(&st, &x) {
                Ok(v) if v.is_zero() => {}
                Ok(v) => {
                    report.push(
                        "vanishing",
                        Err(format!("trial {trial}: evaluated to {v}, expected 0")),
                    );
                    ok = false;
                    break;
                }
                Err(e) => {
                    report.push("vanishing", Err(format!("evaluation failed: {e}")));
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            report.push(
                "vanishing",
                Ok(format!(
                    "exactly zero on {VANISHING_TRIALS} random rational configurations"
                )),
            );
        }
    }

    // (f) forbidden-facet avoidance.
    if forbidden.is_empty() {
        report.push("forbidden", Ok("no forbidden facets supplied".to_owned()));
    } else {
        let mut bad = None;
        'outer: for (m, _) in elim.final_poly.terms() {
            let mut vars = m.vars().to_vec();
            vars.dedup();
            for v in vars {
                if m.multiplicity(v) % 2 == 1 && !st.known(v) {
                    bad = Some(st.render(v));
                    break 'outer;
                }
            }
        }
        match bad {
            None => report.push(
                "forbidden",
                Ok("no surviving solid is determined via a forbidden facet".to_owned()),
            ),
            Some(v) => report.push(
                "forbidden",
                Err(format!(
                    "solid {v} loses its determining facet under the forbidden list"
                )),
            ),
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plucker::Monomial;

    fn poly(terms: &[(i64, &[SolidId])]) -> CertPolynomial {
        let mut p = CertPolynomial::zero();
        for (c, vars) in terms {
            p.add_term(Monomial::from_vars(vars.to_vec()), BigInt::from(*c));
        }
        p
    }

    #[test]
    fn eliminate_edge_figure_pattern() {
        // p = c0·A + d0·B + R0, leaf = -c1·A + R1 over abstract variables:
        // A=0, B=1, c0=2, d0=3, R0=4, c1=5, R1=6 (as variables with unit
        // coefficients standing in for the polynomials).
        let p = poly(&[(1, &[2, 0]), (1, &[3, 1]), (1, &[4])]);
        let leaf = poly(&[(-1, &[5, 0]), (1, &[6])]);
        let out = eliminate_edge(&p, &leaf, 0).unwrap();
        // c1·d0·B + c1·R0 + c0·R1
        let expected = poly(&[(1, &[5, 3, 1]), (1, &[5, 4]), (1, &[2, 6])]);
        assert_eq!(out, expected);
    }

    #[test]
    fn positivity_accepts_even_powers_of_unknowns() {
        use crate::complex::OrientedComplex;
        use crate::solids::SolidTable;
        // Hexagon: d=2, solids are triples; {0,2,4} is independent in the
        // cycle and therefore unknown.
        let cx = OrientedComplex::from_text("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap();
        let st = SolidTable::new(&cx, &[]).unwrap();
        let unknown = st.id_of_support(&[0, 2, 4]).unwrap();
        assert!(!st.known(unknown));
        let known = st.id_of_support(&[0, 1, 2]).unwrap();
        assert!(st.known(known));

        let mut p = CertPolynomial::zero();
        p.add_term(
            Monomial::from_vars(vec![unknown, unknown, known]),
            BigInt::from(2),
        );
        match positivity_check(&st, &p) {
            Positivity::Positive(w) => assert!(w.used_even_power_relaxation),
            Positivity::Fail { reason } => panic!("{reason}"),
        }

        let mut q = CertPolynomial::zero();
        q.add_term(Monomial::from_vars(vec![unknown, known]), BigInt::from(1));
        assert!(matches!(
            positivity_check(&st, &q),
            Positivity::Fail { .. }
        ));

        let mut r = CertPolynomial::zero();
        r.add_term(Monomial::var(known), BigInt::from(-1));
        assert!(matches!(
            positivity_check(&st, &r),
            Positivity::Fail { .. }
        ));
        assert!(matches!(
            positivity_check(&st, &CertPolynomial::zero()),
            Positivity::Fail { .. }
        ));
    }

    #[test]
    fn eliminate_edge_rejects_absent_color() {
        let p = poly(&[(1, &[2, 0])]);
        let q = poly(&[(1, &[3])]);
        assert!(eliminate_edge(&p, &q, 0).is_err());
    }

    #[test]
    fn two_trinomials_give_four_terms() {
        // Shared solid 0 with opposite signs.
        let p = poly(&[(1, &[0, 1]), (-1, &[2, 3]), (1, &[4, 5])]);
        let q = poly(&[(-1, &[0, 6]), (1, &[7, 8]), (-1, &[9, 10])]);
        let out = eliminate_edge(&p, &q, 0).unwrap();
        assert_eq!(out.len(), 4);
        assert!(!out.contains_var(0));
    }
}
