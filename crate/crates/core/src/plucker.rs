//! 3-term Plücker relations with canonical signs, and exact polynomials in
//! normal-form solid variables (the certificate ring).
//!
//! A relation Γ(S|ijkl) = [Sij][Skl] - [Sik][Sjl] + [Sil][Sjk] vanishes on
//! the minors of any matrix. Rewriting each bracket in normal-form
//! variables turns it into an integer-coefficient trinomial whose term
//! signs are definite exactly when both solids of the term are known.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::complex::ComplexError;
use crate::solids::{FuzzySign, SolidId, SolidTable};
use crate::Vertex;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("relation indices overlap or have the wrong cardinality: {0}")]
    BadRelation(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("variable does not occur in the polynomial")]
    VariableAbsent,
    #[error("variable occurs with exponent > 1; cannot eliminate")]
    NonlinearVariable,
    #[error("configuration dimension mismatch: expected {expected} columns of height {height}")]
    DimensionMismatch { expected: usize, height: usize },
}

/// One term of a relation: an unordered pair of solid variables with its
/// exact ring coefficient and its fuzzy value sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub a: SolidId,
    pub b: SolidId,
    /// Exact coefficient of x_a·x_b in the certificate ring.
    pub coeff: i8,
    /// Value sign: equals `coeff` when both solids are known, `?` otherwise.
    pub sigma: FuzzySign,
}

impl Term {
    pub fn contains(&self, v: SolidId) -> bool {
        self.a == v || self.b == v
    }

    pub fn partner(&self, v: SolidId) -> Option<SolidId> {
        if self.a == v {
            Some(self.b)
        } else if self.b == v {
            Some(self.a)
        } else {
            None
        }
    }
}

/// A signed 3-term Plücker relation in normal-form variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub s: Vec<Vertex>,
    pub quad: [Vertex; 4],
    pub sign: i8,
    pub terms: [Term; 3],
}

/// Identity of a relation node, ordered (S, quad, sign) with +Γ before -Γ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationKey {
    pub s: Vec<Vertex>,
    pub quad: [Vertex; 4],
    /// 0 for +Γ, 1 for -Γ, so that +Γ sorts first.
    pub neg: bool,
}

impl Relation {
    pub fn key(&self) -> RelationKey {
        RelationKey {
            s: self.s.clone(),
            quad: self.quad,
            neg: self.sign < 0,
        }
    }

    /// The term containing a given solid, if any. Each solid occurs in at
    /// most one term because the six supports are pairwise distinct.
    pub fn term_with(&self, v: SolidId) -> Option<&Term> {
        self.terms.iter().find(|t| t.contains(v))
    }

    /// Solid ids of the relation's six variables.
    pub fn solids(&self) -> [SolidId; 6] {
        [
            self.terms[0].a,
            self.terms[0].b,
            self.terms[1].a,
            self.terms[1].b,
            self.terms[2].a,
            self.terms[2].b,
        ]
    }

    /// Unknown solids of the relation, deduplicated.
    pub fn unknown_solids(&self, st: &SolidTable) -> Vec<SolidId> {
        let mut out: Vec<SolidId> = self
            .solids()
            .into_iter()
            .filter(|&v| !st.known(v))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// No term pairs two unknown solids.
    pub fn admissible(&self, st: &SolidTable) -> bool {
        self.terms
            .iter()
            .all(|t| st.known(t.a) || st.known(t.b))
    }

    pub fn render(&self, st: &SolidTable) -> String {
        let vt = st.complex().vertices();
        format!(
            "{}Γ({}|{})",
            if self.sign < 0 { "-" } else { "" },
            vt.render_seq(&self.s),
            vt.render_seq(&self.quad)
        )
    }
}

/// Builds ±Γ(S|ijkl) in normal-form variables. `s` must have cardinality
/// d-1 and the seven indices must be pairwise distinct; `quad` need not be
/// sorted (sorting multiplies the relation by the permutation signature).
pub fn make_relation(
    st: &SolidTable,
    s: &[Vertex],
    quad: &[Vertex; 4],
    sign: i8,
) -> Result<Relation, RingError> {
    let d = st.complex().d();
    let describe = || {
        let vt = st.complex().vertices();
        format!("({}|{})", vt.render_seq(s), vt.render_seq(quad))
    };
    if s.len() + 2 != d + 1 {
        return Err(RingError::BadRelation(describe()));
    }
    let mut s_sorted = s.to_vec();
    s_sorted.sort_unstable();
    s_sorted.dedup();
    if s_sorted.len() != s.len() {
        return Err(RingError::BadRelation(describe()));
    }
    let mut quad_sorted = *quad;
    quad_sorted.sort_unstable();
    let mut all = s_sorted.clone();
    all.extend_from_slice(&quad_sorted);
    all.sort_unstable();
    all.dedup();
    if all.len() != s.len() + 4 {
        return Err(RingError::BadRelation(describe()));
    }
    let quad_eps = crate::complex::permutation_signature(quad)?;
    let sign = sign * quad_eps;
    let [i, j, k, l] = quad_sorted;

    let pair = |x: Vertex, y: Vertex| -> Result<(SolidId, i8), RingError> {
        let mut seq = s_sorted.clone();
        seq.push(x);
        seq.push(y);
        Ok(st.resolve_seq(&seq)?)
    };
    let mut terms = [Term {
        a: 0,
        b: 0,
        coeff: 0,
        sigma: FuzzySign::Unknown,
    }; 3];
    let pattern = [1i8, -1, 1];
    let pairs = [((i, j), (k, l)), ((i, k), (j, l)), ((i, l), (j, k))];
    for (t, (first, second)) in pairs.into_iter().enumerate() {
        let (a, fa) = pair(first.0, first.1)?;
        let (b, fb) = pair(second.0, second.1)?;
        let coeff = sign * pattern[t] * fa * fb;
        let sigma = if st.known(a) && st.known(b) {
            FuzzySign::from_i8(coeff)
        } else {
            FuzzySign::Unknown
        };
        terms[t] = Term {
            a,
            b,
            coeff,
            sigma,
        };
    }
    Ok(Relation {
        s: s_sorted,
        quad: quad_sorted,
        sign,
        terms,
    })
}

/// Options restricting relation enumeration to a vertex subset, for
/// searches where the full relation set is out of reach.
#[derive(Debug, Clone, Default)]
pub struct EnumerationOptions {
    /// Only use these vertices (sorted); `None` means all.
    pub vertex_subset: Option<Vec<Vertex>>,
}

/// Enumerates admissible relations, both signs, in lexicographic
/// (S, quad, sign) order with +Γ first.
pub fn enumerate_relations(st: &SolidTable, opts: &EnumerationOptions) -> Vec<Relation> {
    let verts: Vec<Vertex> = match &opts.vertex_subset {
        Some(sub) => sub.clone(),
        None => (0..st.complex().n() as Vertex).collect(),
    };
    let d = st.complex().d();
    if verts.len() < d + 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for s in verts.iter().copied().combinations(d - 1) {
        let rest: Vec<Vertex> = verts.iter().copied().filter(|v| !s.contains(v)).collect();
        for quad in rest.iter().copied().combinations(4) {
            let quad: [Vertex; 4] = quad.try_into().unwrap();
            let rel = make_relation(st, &s, &quad, 1).expect("disjoint by construction");
            if !rel.admissible(st) {
                continue;
            }
            let mut neg = rel.clone();
            neg.sign = -neg.sign;
            for t in &mut neg.terms {
                t.coeff = -t.coeff;
                t.sigma = -t.sigma;
            }
            out.push(rel);
            out.push(neg);
        }
    }
    out
}

/// Monomial: sorted multiset of solid variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<SolidId>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: SolidId) -> Self {
        Monomial(vec![v])
    }

    pub fn from_vars(mut vars: Vec<SolidId>) -> Self {
        vars.sort_unstable();
        Monomial(vars)
    }

    pub fn vars(&self) -> &[SolidId] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.0.len() + other.0.len());
        vars.extend_from_slice(&self.0);
        vars.extend_from_slice(&other.0);
        Monomial::from_vars(vars)
    }

    pub fn multiplicity(&self, v: SolidId) -> usize {
        self.0.iter().filter(|&&w| w == v).count()
    }

    /// Removes one occurrence of `v`.
    pub fn without(&self, v: SolidId) -> Monomial {
        let mut vars = self.0.clone();
        if let Some(pos) = vars.iter().position(|&w| w == v) {
            vars.remove(pos);
        }
        Monomial(vars)
    }
}

/// Exact integer-coefficient polynomial in normal-form solid variables.
/// Zero coefficients are never stored; the map order makes displays and
/// comparisons canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CertPolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl CertPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &CertPolynomial) -> CertPolynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> CertPolynomial {
        CertPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    /// p · (c · m).
    pub fn scale_monomial(&self, mono: &Monomial, coeff: &BigInt) -> CertPolynomial {
        let mut out = CertPolynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.mul(mono), c * coeff);
        }
        out
    }

    pub fn mul(&self, other: &CertPolynomial) -> CertPolynomial {
        let mut out = CertPolynomial::zero();
        for (m, c) in &other.terms {
            for (m2, c2) in &self.terms {
                out.add_term(m2.mul(m), c2 * c);
            }
        }
        out
    }

    /// Splits p = cofactor·x_v + rest, requiring every occurrence of `v` to
    /// be linear. Errors when `v` is absent or appears squared.
    pub fn coefficient_of(
        &self,
        v: SolidId,
    ) -> Result<(CertPolynomial, CertPolynomial), RingError> {
        let mut cofactor = CertPolynomial::zero();
        let mut rest = CertPolynomial::zero();
        for (m, c) in &self.terms {
            match m.multiplicity(v) {
                0 => rest.add_term(m.clone(), c.clone()),
                1 => cofactor.add_term(m.without(v), c.clone()),
                _ => return Err(RingError::NonlinearVariable),
            }
        }
        if cofactor.is_zero() {
            return Err(RingError::VariableAbsent);
        }
        Ok((cofactor, rest))
    }

    pub fn contains_var(&self, v: SolidId) -> bool {
        self.terms.keys().any(|m| m.multiplicity(v) > 0)
    }

    /// Distinct variables occurring in the polynomial.
    pub fn variables(&self) -> Vec<SolidId> {
        let mut vars: Vec<SolidId> = self
            .terms
            .keys()
            .flat_map(|m| m.vars().iter().copied())
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// The relation as a ring element: Σ coeff_t · x_a · x_b.
    pub fn from_relation(rel: &Relation) -> CertPolynomial {
        let mut p = CertPolynomial::zero();
        for t in &rel.terms {
            p.add_term(
                Monomial::from_vars(vec![t.a, t.b]),
                BigInt::from(t.coeff),
            );
        }
        p
    }

    /// True iff every coefficient is negative (used to normalize the global
    /// sign of eliminated certificates, which is only fixed up to the
    /// orientation-reflection ambiguity).
    pub fn all_negative(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.is_negative())
    }

    /// Exact value at a configuration, mapping every variable to the
    /// determinant of its normal-form column sequence.
    pub fn evaluate(
        &self,
        st: &SolidTable,
        config: &PointConfiguration,
    ) -> Result<BigRational, RingError> {
        let mut cache: BTreeMap<SolidId, BigRational> = BTreeMap::new();
        for v in self.variables() {
            let det = config.det_of_columns(st.nf_seq(v))?;
            cache.insert(v, det);
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut prod = BigRational::from(c.clone());
            for v in m.vars() {
                prod *= cache[v].clone();
            }
            acc += prod;
        }
        Ok(acc)
    }

    /// Renders with normal-form brackets, e.g. `[0 1 4 2|5] [0 5 6 7|4]`.
    pub fn render(&self, st: &SolidTable) -> String {
        if self.terms.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.magnitude().to_string();
            if idx == 0 {
                if c.is_negative() {
                    out.push_str("- ");
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mag != "1" || m.degree() == 0 {
                out.push_str(&mag);
                out.push(' ');
            }
            let body = m
                .vars()
                .iter()
                .map(|&v| st.render(v))
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.0)
    }
}

/// Evaluates a polynomial on `trials` random rational configurations and
/// returns the first trial with a nonzero value, if any.
pub fn vanishing_trials(
    st: &SolidTable,
    poly: &CertPolynomial,
    trials: usize,
    seed: u64,
) -> Result<Option<(usize, BigRational)>, RingError> {
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let height = st.complex().d() + 1;
    let n = st.complex().n();
    for t in 0..trials {
        let x = PointConfiguration::random(height, n, &mut rng);
        let v = poly.evaluate(st, &x)?;
        if !v.is_zero() {
            return Ok(Some((t, v)));
        }
    }
    Ok(None)
}

/// Homogeneous coordinates of n points: a (d+1)×n matrix of exact
/// rationals, stored column-major.
#[derive(Debug, Clone)]
pub struct PointConfiguration {
    height: usize,
    columns: Vec<Vec<BigRational>>,
}

impl PointConfiguration {
    pub fn new(height: usize, columns: Vec<Vec<BigRational>>) -> Result<Self, RingError> {
        if columns.iter().any(|c| c.len() != height) {
            return Err(RingError::DimensionMismatch {
                expected: columns.len(),
                height,
            });
        }
        Ok(Self { height, columns })
    }

    /// Random small-integer configuration; the Plücker relations vanish on
    /// every matrix, so no genericity is needed.
    pub fn random<R: Rng>(height: usize, n: usize, rng: &mut R) -> Self {
        let columns = (0..n)
            .map(|_| {
                (0..height)
                    .map(|_| BigRational::from(BigInt::from(rng.gen_range(-50i64..=50))))
                    .collect()
            })
            .collect();
        Self { height, columns }
    }

    /// Points on the moment curve with homogeneous first coordinate.
    pub fn moment_curve(height: usize, params: &[i64]) -> Self {
        let columns = params
            .iter()
            .map(|&t| {
                (0..height)
                    .map(|p| BigRational::from(BigInt::from(t).pow(p as u32)))
                    .collect()
            })
            .collect();
        Self { height, columns }
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Determinant of the square matrix formed by the given columns in the
    /// given order.
    pub fn det_of_columns(&self, cols: &[Vertex]) -> Result<BigRational, RingError> {
        if cols.len() != self.height {
            return Err(RingError::DimensionMismatch {
                expected: cols.len(),
                height: self.height,
            });
        }
        if cols.iter().any(|&c| c as usize >= self.columns.len()) {
            return Err(RingError::DimensionMismatch {
                expected: self.columns.len(),
                height: self.height,
            });
        }
        let k = self.height;
        let mut m: Vec<Vec<BigRational>> = (0..k)
            .map(|r| cols.iter().map(|&c| self.columns[c as usize][r].clone()).collect())
            .collect();
        // Gaussian elimination with exact rationals.
        let mut det = BigRational::one();
        for col in 0..k {
            let pivot = (col..k).find(|&r| !m[r][col].is_zero());
            let Some(pivot) = pivot else {
                return Ok(BigRational::zero());
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let p = m[col][col].clone();
            det *= p.clone();
            let pivot_row = m[col].clone();
            for row in m.iter_mut().skip(col + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone() / p.clone();
                for (c2, pv) in pivot_row.iter().enumerate().skip(col) {
                    let sub = factor.clone() * pv.clone();
                    row[c2] -= sub;
                }
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::OrientedComplex;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn sphere() -> OrientedComplex {
        // Boundary of the 4-simplex: 3-sphere on 5 vertices, d = 4.
        OrientedComplex::from_text("0 1 2 3\n0 1 2 4\n0 1 3 4\n0 2 3 4\n1 2 3 4\n").unwrap()
    }

    #[test]
    fn make_relation_needs_enough_vertices() {
        let cx = OrientedComplex::from_text("0 1 2\n0 1 3\n0 2 3\n1 2 3\n").unwrap();
        let st = SolidTable::new(&cx, &[]).unwrap();
        // d = 3 needs d+3 = 6 distinct vertices but n = 4.
        assert!(make_relation(&st, &[0, 1], &[0, 1, 2, 3], 1).is_err());
        assert!(enumerate_relations(&st, &EnumerationOptions::default()).is_empty());
    }

    fn pentagon() -> OrientedComplex {
        OrientedComplex::from_text("0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap()
    }

    #[test]
    fn relation_sign_flips_with_quad_signature() {
        let cx = pentagon();
        let st = SolidTable::new(&cx, &[]).unwrap();
        let sorted = make_relation(&st, &[4], &[0, 1, 2, 3], 1).unwrap();
        let permuted = make_relation(&st, &[4], &[1, 0, 2, 3], 1).unwrap();
        // One transposition: the permuted relation is -Γ.
        assert_eq!(permuted.s, sorted.s);
        assert_eq!(permuted.quad, sorted.quad);
        assert_eq!(permuted.sign, -sorted.sign);
        for (t1, t2) in sorted.terms.iter().zip(permuted.terms.iter()) {
            assert_eq!(t1.coeff, -t2.coeff);
        }
    }

    #[test]
    fn relation_vanishes_on_random_configurations() {
        let cx = pentagon();
        let st = SolidTable::new(&cx, &[]).unwrap();
        let rel = make_relation(&st, &[4], &[0, 1, 2, 3], 1).unwrap();
        let p = CertPolynomial::from_relation(&rel);
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..25 {
            let x = PointConfiguration::random(3, 5, &mut rng);
            assert!(p.evaluate(&st, &x).unwrap().is_zero());
        }
    }

    #[test]
    fn poly_add_neg_cancels() {
        let cx = sphere();
        let st = SolidTable::new(&cx, &[]).unwrap();
        let mut p = CertPolynomial::zero();
        p.add_term(Monomial::var(0), BigInt::from(3));
        p.add_term(Monomial::from_vars(vec![0, 1]), BigInt::from(-2));
        let sum = p.add(&p.neg());
        assert!(sum.is_zero());
        let _ = st;
    }

    #[test]
    fn coefficient_of_trinomial_is_partner() {
        let cx = pentagon();
        let st = SolidTable::new(&cx, &[]).unwrap();
        let rel = make_relation(&st, &[4], &[0, 1, 2, 3], 1).unwrap();
        let p = CertPolynomial::from_relation(&rel);
        let v = rel.terms[0].a;
        let (cof, rest) = p.coefficient_of(v).unwrap();
        assert_eq!(cof.len(), 1);
        assert_eq!(rest.len(), 2);
        let (m, c) = cof.terms().next().unwrap();
        assert_eq!(m.vars(), &[rel.terms[0].b]);
        assert_eq!(c, &BigInt::from(rel.terms[0].coeff));
    }

    #[test]
    fn coefficient_of_rejects_squares_and_absent() {
        let mut p = CertPolynomial::zero();
        p.add_term(Monomial::from_vars(vec![5, 5]), BigInt::one());
        assert!(matches!(
            p.coefficient_of(5),
            Err(RingError::NonlinearVariable)
        ));
        let mut q = CertPolynomial::zero();
        q.add_term(Monomial::var(1), BigInt::one());
        assert!(matches!(q.coefficient_of(2), Err(RingError::VariableAbsent)));
    }

    #[test]
    fn determinant_exact() {
        let cols = vec![
            vec![BigRational::from(BigInt::from(1)), BigRational::from(BigInt::from(3))],
            vec![BigRational::from(BigInt::from(2)), BigRational::from(BigInt::from(4))],
        ];
        let x = PointConfiguration::new(2, cols).unwrap();
        assert_eq!(
            x.det_of_columns(&[0, 1]).unwrap(),
            BigRational::from(BigInt::from(-2))
        );
        assert_eq!(
            x.det_of_columns(&[1, 0]).unwrap(),
            BigRational::from(BigInt::from(2))
        );
    }
}
