//! Pure simplicial complexes given by facet lists: parsing, pseudomanifold
//! classification, boundary coning, and top-dimensional orientation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::Vertex;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("facet file mixes signed and unsigned lines")]
    MixedSigns,
    #[error("duplicate vertex {0} within a facet")]
    DuplicateVertex(String),
    #[error("duplicate facet {0}")]
    DuplicateFacet(String),
    #[error("facets of different cardinality: {0} vs {1}")]
    NotPure(usize, usize),
    #[error("too many vertices ({0}); at most 255 supported")]
    TooManyVertices(usize),
    #[error("empty facet list")]
    Empty,
    #[error("ridge {0} lies in {1} facets; not a pseudomanifold")]
    OverloadedRidge(String, usize),
    #[error("orientation propagation conflict at facet {0}; not orientable")]
    NotOrientable(String),
    #[error("complex is already closed; nothing to cone")]
    AlreadyClosed,
    #[error("unknown vertex token `{0}`")]
    UnknownVertex(String),
    #[error("not a solid of this complex: {0}")]
    NotASolid(String),
    #[error("facet {0} is not a facet of the complex")]
    NoSuchFacet(String),
}

/// Ordered table of distinct vertex tokens. The index of a token is its
/// position of first appearance in the input, which also fixes the total
/// order used everywhere downstream (sorted facets, normal forms, ties).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexTable {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
}

impl VertexTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of `token`, interning it if unseen.
    pub fn intern(&mut self, token: &str) -> Result<Vertex, ComplexError> {
        if let Some(&i) = self.index.get(token) {
            return Ok(i);
        }
        if self.labels.len() >= 255 {
            return Err(ComplexError::TooManyVertices(self.labels.len() + 1));
        }
        let i = self.labels.len() as Vertex;
        self.labels.push(token.to_owned());
        self.index.insert(token.to_owned(), i);
        Ok(i)
    }

    pub fn lookup(&self, token: &str) -> Result<Vertex, ComplexError> {
        self.index
            .get(token)
            .copied()
            .ok_or_else(|| ComplexError::UnknownVertex(token.to_owned()))
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Renders a vertex sequence as `v1 v2 ...` using the stored tokens.
    pub fn render_seq(&self, seq: &[Vertex]) -> String {
        seq.iter()
            .map(|&v| self.label(v))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn valid_token(tok: &str) -> bool {
    !tok.is_empty()
        && !tok
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '[' | ']' | '#'))
}

/// Result of [`parse_facets`]: facets in file order, each in its printed
/// vertex order, with the per-line signs if every line carried one.
#[derive(Debug, Clone)]
pub struct ParsedFacets {
    pub vertices: VertexTable,
    /// Facet vertex sequences exactly as printed (not sorted).
    pub facet_seqs: Vec<Vec<Vertex>>,
    pub signs: Option<Vec<i8>>,
}

/// Parses facet-file content: one facet per line, `#` starts a comment,
/// an optional leading `+`/`-` orients the printed vertex sequence, and
/// signing is all-or-none across the file. Barred labels are written `~x`.
pub fn parse_facets(text: &str) -> Result<ParsedFacets, ComplexError> {
    let mut vertices = VertexTable::new();
    let mut facet_seqs: Vec<Vec<Vertex>> = Vec::new();
    let mut signs: Vec<i8> = Vec::new();
    let mut seen: BTreeSet<Vec<Vertex>> = BTreeSet::new();
    let mut any_signed = false;
    let mut any_unsigned = false;

    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut toks = line.split_whitespace().peekable();
        let Some(&first) = toks.peek() else { continue };
        let sign = match first {
            "+" => {
                toks.next();
                Some(1i8)
            }
            "-" => {
                toks.next();
                Some(-1i8)
            }
            _ => None,
        };
        match sign {
            Some(_) => any_signed = true,
            None => any_unsigned = true,
        }
        if any_signed && any_unsigned {
            return Err(ComplexError::MixedSigns);
        }
        let mut seq = Vec::new();
        for tok in toks {
            if !valid_token(tok) {
                return Err(ComplexError::Parse {
                    line: lineno + 1,
                    msg: format!("invalid vertex token `{tok}`"),
                });
            }
            let v = vertices.intern(tok)?;
            if seq.contains(&v) {
                return Err(ComplexError::DuplicateVertex(tok.to_owned()));
            }
            seq.push(v);
        }
        if seq.is_empty() {
            return Err(ComplexError::Parse {
                line: lineno + 1,
                msg: "sign without vertices".to_owned(),
            });
        }
        let mut key = seq.clone();
        key.sort_unstable();
        if !seen.insert(key) {
            return Err(ComplexError::DuplicateFacet(vertices.render_seq(&seq)));
        }
        facet_seqs.push(seq);
        signs.push(sign.unwrap_or(1));
    }

    if facet_seqs.is_empty() {
        return Err(ComplexError::Empty);
    }
    Ok(ParsedFacets {
        vertices,
        facet_seqs,
        signs: if any_signed { Some(signs) } else { None },
    })
}

/// Sign of the permutation that sorts `seq` ascending. Errors on repeats.
pub fn permutation_signature(seq: &[Vertex]) -> Result<i8, ComplexError> {
    let mut sign = 1i8;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            match seq[j].cmp(&seq[i]) {
                std::cmp::Ordering::Less => sign = -sign,
                std::cmp::Ordering::Equal => {
                    return Err(ComplexError::DuplicateVertex(format!("{}", seq[i])))
                }
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    Ok(sign)
}

/// Pseudomanifold classification: every ridge lies in at most two facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PseudomanifoldClass {
    Closed,
    /// Connected components of the boundary ridge set, ridges adjacent when
    /// they share a face of cardinality d-2.
    WithBoundary(Vec<Vec<Vec<Vertex>>>),
}

/// A validated pure simplicial complex: facets sorted ascending and
/// deduplicated, with the ridge incidence structure precomputed.
#[derive(Debug, Clone)]
pub struct Complex {
    vertices: VertexTable,
    d: usize,
    facets: Vec<Vec<Vertex>>,
    facet_index: HashMap<Vec<Vertex>, u32>,
    ridge_incidence: BTreeMap<Vec<Vertex>, Vec<u32>>,
}

impl Complex {
    /// Builds a complex from facet vertex sequences (any order within each).
    /// Validates purity and distinctness; pseudomanifoldness is checked
    /// separately by [`Complex::pseudomanifold_check`].
    pub fn new(vertices: VertexTable, facet_seqs: &[Vec<Vertex>]) -> Result<Self, ComplexError> {
        if facet_seqs.is_empty() {
            return Err(ComplexError::Empty);
        }
        let d = facet_seqs[0].len();
        let mut facets: Vec<Vec<Vertex>> = Vec::with_capacity(facet_seqs.len());
        for seq in facet_seqs {
            if seq.len() != d {
                return Err(ComplexError::NotPure(d, seq.len()));
            }
            let mut f = seq.clone();
            f.sort_unstable();
            f.dedup();
            if f.len() != d {
                return Err(ComplexError::DuplicateVertex(vertices.render_seq(seq)));
            }
            facets.push(f);
        }
        let mut sorted = facets.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            let dup = sorted
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| vertices.render_seq(&w[0]))
                .unwrap_or_default();
            return Err(ComplexError::DuplicateFacet(dup));
        }
        facets = sorted;
        let facet_index = facets
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i as u32))
            .collect();

        let mut ridge_incidence: BTreeMap<Vec<Vertex>, Vec<u32>> = BTreeMap::new();
        for (fi, f) in facets.iter().enumerate() {
            for skip in 0..d {
                let mut ridge = f.clone();
                ridge.remove(skip);
                ridge_incidence.entry(ridge).or_default().push(fi as u32);
            }
        }
        Ok(Self {
            vertices,
            d,
            facets,
            facet_index,
            ridge_incidence,
        })
    }

    /// Convenience: parse then build.
    pub fn from_text(text: &str) -> Result<(Self, Option<Vec<i8>>), ComplexError> {
        let parsed = parse_facets(text)?;
        let omega = printed_orientation(&parsed)?;
        let cx = Self::new(parsed.vertices.clone(), &parsed.facet_seqs)?;
        // Signs were recorded per input line; remap to the sorted facet order.
        let omega = omega.map(|signed| {
            let mut out = vec![0i8; signed.len()];
            for (seq, s) in parsed.facet_seqs.iter().zip(signed) {
                let mut key = seq.clone();
                key.sort_unstable();
                let fi = cx.facet_index[&key] as usize;
                out[fi] = s;
            }
            out
        });
        Ok((cx, omega))
    }

    pub fn vertices(&self) -> &VertexTable {
        &self.vertices
    }

    /// Facet cardinality (dimension + 1).
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Facets, each ascending, sorted lexicographically.
    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    pub fn facet_id(&self, facet_sorted: &[Vertex]) -> Option<u32> {
        self.facet_index.get(facet_sorted).copied()
    }

    pub fn is_facet(&self, facet_sorted: &[Vertex]) -> bool {
        self.facet_index.contains_key(facet_sorted)
    }

    pub fn ridge_incidence(&self) -> &BTreeMap<Vec<Vertex>, Vec<u32>> {
        &self.ridge_incidence
    }

    pub fn boundary_ridges(&self) -> Vec<Vec<Vertex>> {
        self.ridge_incidence
            .iter()
            .filter(|(_, inc)| inc.len() == 1)
            .map(|(r, _)| r.clone())
            .collect()
    }

    /// Classifies the complex, or errors if some ridge lies in three or
    /// more facets.
    pub fn pseudomanifold_check(&self) -> Result<PseudomanifoldClass, ComplexError> {
        for (ridge, inc) in &self.ridge_incidence {
            if inc.len() > 2 {
                return Err(ComplexError::OverloadedRidge(
                    self.vertices.render_seq(ridge),
                    inc.len(),
                ));
            }
        }
        let boundary = self.boundary_ridges();
        if boundary.is_empty() {
            return Ok(PseudomanifoldClass::Closed);
        }
        // Group boundary ridges into components, adjacent when they share a
        // (d-2)-subset.
        let mut sub_index: HashMap<Vec<Vertex>, Vec<usize>> = HashMap::new();
        for (ri, ridge) in boundary.iter().enumerate() {
            for skip in 0..ridge.len() {
                let mut sub = ridge.clone();
                sub.remove(skip);
                sub_index.entry(sub).or_default().push(ri);
            }
        }
        let mut comp = vec![usize::MAX; boundary.len()];
        let mut ncomp = 0;
        for start in 0..boundary.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = ncomp;
            while let Some(ri) = stack.pop() {
                for skip in 0..boundary[ri].len() {
                    let mut sub = boundary[ri].clone();
                    sub.remove(skip);
                    for &rj in &sub_index[&sub] {
                        if comp[rj] == usize::MAX {
                            comp[rj] = ncomp;
                            stack.push(rj);
                        }
                    }
                }
            }
            ncomp += 1;
        }
        let mut components = vec![Vec::new(); ncomp];
        for (ri, ridge) in boundary.iter().enumerate() {
            components[comp[ri]].push(ridge.clone());
        }
        Ok(PseudomanifoldClass::WithBoundary(components))
    }

    /// Cones each boundary component with a fresh apex vertex, producing a
    /// closed complex together with the apex assigned to each component.
    /// Errors when the complex is already closed.
    pub fn cone_boundary(&self) -> Result<(Complex, Vec<Vertex>), ComplexError> {
        let components = match self.pseudomanifold_check()? {
            PseudomanifoldClass::Closed => return Err(ComplexError::AlreadyClosed),
            PseudomanifoldClass::WithBoundary(c) => c,
        };
        let mut vertices = self.vertices.clone();
        let mut facet_seqs: Vec<Vec<Vertex>> = self.facets.clone();
        let mut apexes = Vec::new();
        for (j, comp) in components.iter().enumerate() {
            let mut token = format!("_apex{j}");
            while vertices.lookup(&token).is_ok() {
                token.push('_');
            }
            let apex = vertices.intern(&token)?;
            apexes.push(apex);
            for ridge in comp {
                let mut f = ridge.clone();
                f.push(apex);
                facet_seqs.push(f);
            }
        }
        let coned = Complex::new(vertices, &facet_seqs)?;
        Ok((coned, apexes))
    }

    /// Number of faces in each dimension, 0-dimensional first.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut faces: Vec<BTreeSet<Vec<Vertex>>> = vec![BTreeSet::new(); self.d];
        for f in &self.facets {
            for mask in 1u32..(1 << self.d) {
                let sub: Vec<Vertex> = (0..self.d)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| f[i])
                    .collect();
                faces[sub.len() - 1].insert(sub);
            }
        }
        faces.iter().map(|s| s.len() as u64).collect()
    }

    /// Link of a vertex: facets containing `v`, with `v` removed.
    pub fn link(&self, v: Vertex) -> Result<Complex, ComplexError> {
        let facet_seqs: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| f.iter().copied().filter(|&w| w != v).collect())
            .collect();
        Complex::new(self.vertices.clone(), &facet_seqs)
    }
}

/// Converts per-line printed signs into an orientation map on the sorted
/// facets: a printed sign orients the facet in its printed vertex order, so
/// sorting the vertices multiplies by the permutation signature.
pub fn printed_orientation(parsed: &ParsedFacets) -> Result<Option<Vec<i8>>, ComplexError> {
    let Some(signs) = &parsed.signs else {
        return Ok(None);
    };
    let mut out = Vec::with_capacity(signs.len());
    for (seq, &s) in parsed.facet_seqs.iter().zip(signs) {
        out.push(s * permutation_signature(seq)?);
    }
    Ok(Some(out))
}

/// True iff the chain with coefficients `omega` on the ascending facet
/// orderings cancels on every interior ridge.
pub fn check_cycle(cx: &Complex, omega: &[i8]) -> bool {
    if omega.len() != cx.facets.len() || omega.iter().any(|&s| s != 1 && s != -1) {
        return false;
    }
    for inc in cx.ridge_incidence.values() {
        if inc.len() != 2 {
            continue;
        }
        let (fa, fb) = (inc[0] as usize, inc[1] as usize);
        // Position of the vertex dropped to form the ridge gives the sign
        // of the ridge inside the facet's boundary.
        let sum: i32 = [fa, fb]
            .iter()
            .map(|&fi| {
                let f = &cx.facets[fi];
                let other = inc.iter().find(|&&g| g as usize != fi).unwrap();
                let g = &cx.facets[*other as usize];
                let dropped = f.iter().position(|v| !g.contains(v));
                // Shared ridge: exactly one vertex of f is outside g unless
                // the two facets coincide, which purity+dedup excludes.
                let pos = dropped.expect("distinct facets share a ridge");
                i32::from(omega[fi]) * if pos % 2 == 0 { 1 } else { -1 }
            })
            .sum();
        if sum != 0 {
            return false;
        }
    }
    true
}

/// Outcome of [`orient`]: the orientation map plus flags for the cases the
/// caller may want to surface.
#[derive(Debug, Clone)]
pub struct Orientation {
    pub omega: Vec<i8>,
    /// True when the dual graph was disconnected and each component was
    /// oriented separately.
    pub disconnected: bool,
    /// True when the input had a boundary and was coned before orienting.
    pub coned: bool,
}

fn orient_closed(cx: &Complex) -> Result<Orientation, ComplexError> {
    let nf = cx.facets.len();
    let mut omega = vec![0i8; nf];
    let mut disconnected = false;
    // Facet adjacency via interior ridges.
    let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); nf];
    for inc in cx.ridge_incidence.values() {
        if inc.len() != 2 {
            continue;
        }
        let (a, b) = (inc[0] as usize, inc[1] as usize);
        let pos = |fi: usize, other: usize| -> i8 {
            let f = &cx.facets[fi];
            let g = &cx.facets[other];
            let p = f.iter().position(|v| !g.contains(v)).unwrap();
            if p % 2 == 0 {
                1
            } else {
                -1
            }
        };
        // omega[b] = -omega[a] * sgn_a * sgn_b with sgn the ridge sign in
        // each facet boundary.
        let rel = -pos(a, b) * pos(b, a);
        adj[a].push((b, rel));
        adj[b].push((a, rel));
    }
    let mut first = true;
    for start in 0..nf {
        if omega[start] != 0 {
            continue;
        }
        if !first {
            disconnected = true;
        }
        first = false;
        omega[start] = 1; // lexicographically smallest facet of the component
        let mut stack = vec![start];
        while let Some(fi) = stack.pop() {
            for &(fj, rel) in &adj[fi] {
                let want = omega[fi] * rel;
                if omega[fj] == 0 {
                    omega[fj] = want;
                    stack.push(fj);
                } else if omega[fj] != want {
                    return Err(ComplexError::NotOrientable(
                        cx.vertices.render_seq(&cx.facets[fj]),
                    ));
                }
            }
        }
    }
    debug_assert!(check_cycle(cx, &omega));
    Ok(Orientation {
        omega,
        disconnected,
        coned: false,
    })
}

/// Computes an orientation: a ±1 per facet whose signed facet chain is a
/// top-dimensional cycle (after coning the boundary if one is present).
/// Deterministic: the lexicographically smallest facet of each dual-graph
/// component receives +1.
pub fn orient(cx: &Complex) -> Result<Orientation, ComplexError> {
    match cx.pseudomanifold_check()? {
        PseudomanifoldClass::Closed => orient_closed(cx),
        PseudomanifoldClass::WithBoundary(_) => {
            let (coned, _) = cx.cone_boundary()?;
            let coned_orientation = orient_closed(&coned)?;
            let mut omega = vec![0i8; cx.facets.len()];
            for (fi, f) in cx.facets.iter().enumerate() {
                let ci = coned
                    .facet_id(f)
                    .expect("original facet survives coning") as usize;
                omega[fi] = coned_orientation.omega[ci];
            }
            Ok(Orientation {
                omega,
                disconnected: coned_orientation.disconnected,
                coned: true,
            })
        }
    }
}

/// A complex together with a fixed orientation map.
#[derive(Debug, Clone)]
pub struct OrientedComplex {
    complex: Complex,
    omega: Vec<i8>,
}

impl OrientedComplex {
    /// Orients the complex with [`orient`].
    pub fn orient(complex: Complex) -> Result<Self, ComplexError> {
        let o = orient(&complex)?;
        Ok(Self {
            complex,
            omega: o.omega,
        })
    }

    /// Adopts a caller-supplied orientation after verifying it is a cycle
    /// on the interior ridges.
    pub fn with_orientation(complex: Complex, omega: Vec<i8>) -> Result<Self, ComplexError> {
        complex.pseudomanifold_check()?;
        if !check_cycle(&complex, &omega) {
            return Err(ComplexError::NotOrientable(
                "supplied signs do not form a cycle".to_owned(),
            ));
        }
        Ok(Self { complex, omega })
    }

    /// Builds from facet-file content: printed signs are validated and
    /// adopted when present, otherwise an orientation is computed.
    pub fn from_text(text: &str) -> Result<Self, ComplexError> {
        let (cx, omega) = Complex::from_text(text)?;
        match omega {
            Some(o) => Self::with_orientation(cx, o),
            None => Self::orient(cx),
        }
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn omega(&self) -> &[i8] {
        &self.omega
    }

    pub fn omega_of(&self, facet_id: u32) -> i8 {
        self.omega[facet_id as usize]
    }

    pub fn vertices(&self) -> &VertexTable {
        &self.complex.vertices
    }

    pub fn d(&self) -> usize {
        self.complex.d
    }

    pub fn n(&self) -> usize {
        self.complex.n()
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        self.complex.facets()
    }
}

impl fmt::Display for OrientedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (facet, &s) in self.complex.facets().iter().zip(&self.omega) {
            writeln!(
                f,
                "{} {}",
                if s > 0 { "+" } else { "-" },
                self.complex.vertices.render_seq(facet)
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary_of_simplex() -> &'static str {
        "0 1 2\n0 1 3\n0 2 3\n1 2 3\n"
    }

    #[test]
    fn parse_signed_and_unsigned() {
        let p = parse_facets("+ 0 1 2 3\n- 0 1 2 4\n").unwrap();
        assert_eq!(p.vertices.len(), 5);
        assert_eq!(p.signs, Some(vec![1, -1]));

        let p = parse_facets(boundary_of_simplex()).unwrap();
        assert_eq!(p.vertices.len(), 4);
        assert_eq!(p.facet_seqs.len(), 4);
        assert!(p.signs.is_none());
    }

    #[test]
    fn parse_rejects_mixed_signs() {
        assert!(matches!(
            parse_facets("+ 0 1 2\n0 1 3\n"),
            Err(ComplexError::MixedSigns)
        ));
    }

    #[test]
    fn parse_rejects_duplicate_facet() {
        assert!(matches!(
            parse_facets("+ a b c\n+ a b c\n"),
            Err(ComplexError::DuplicateFacet(_))
        ));
        // Also under reordering.
        assert!(matches!(
            parse_facets("a b c\nc b a\n"),
            Err(ComplexError::DuplicateFacet(_))
        ));
    }

    #[test]
    fn parse_rejects_duplicate_vertex_within_facet() {
        assert!(matches!(
            parse_facets("0 1 1\n"),
            Err(ComplexError::DuplicateVertex(_))
        ));
    }

    #[test]
    fn parse_rejects_nonuniform_cardinality() {
        let p = parse_facets("0 1 2\n0 1\n").unwrap();
        assert!(matches!(
            Complex::new(p.vertices, &p.facet_seqs),
            Err(ComplexError::NotPure(3, 2))
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let p = parse_facets("# header\n\n0 1 2 # trailing\n0 1 3\n").unwrap();
        assert_eq!(p.facet_seqs.len(), 2);
    }

    #[test]
    fn barred_tokens() {
        let p = parse_facets("1 ~1 2\n").unwrap();
        assert_eq!(p.vertices.label(1), "~1");
    }

    #[test]
    fn signature_basics() {
        assert_eq!(permutation_signature(&[0, 1, 2, 4, 5]).unwrap(), 1);
        assert_eq!(permutation_signature(&[0, 1, 4, 2, 5]).unwrap(), -1);
        assert_eq!(permutation_signature(&[2, 0, 1]).unwrap(), 1);
        assert!(permutation_signature(&[1, 1]).is_err());
    }

    #[test]
    fn boundary_simplex_is_closed() {
        let (cx, _) = Complex::from_text(boundary_of_simplex()).unwrap();
        assert_eq!(
            cx.pseudomanifold_check().unwrap(),
            PseudomanifoldClass::Closed
        );
        assert_eq!(cx.f_vector(), vec![4, 6, 4]);
    }

    #[test]
    fn disk_has_one_boundary_component() {
        let (cx, _) = Complex::from_text("0 1 2\n0 1 3\n0 2 3\n").unwrap();
        match cx.pseudomanifold_check().unwrap() {
            PseudomanifoldClass::WithBoundary(comps) => {
                assert_eq!(comps.len(), 1);
                let mut all: Vec<_> = comps[0].clone();
                all.sort();
                assert_eq!(all, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
            }
            other => panic!("expected boundary, got {other:?}"),
        }
    }

    #[test]
    fn book_complex_is_not_pseudomanifold() {
        let (cx, _) = Complex::from_text("0 1 2\n0 1 3\n0 1 4\n").unwrap();
        assert!(matches!(
            cx.pseudomanifold_check(),
            Err(ComplexError::OverloadedRidge(_, 3))
        ));
    }

    #[test]
    fn cone_disk_gives_boundary_of_simplex() {
        let (cx, _) = Complex::from_text("0 1 2\n0 1 3\n0 2 3\n").unwrap();
        let (coned, apexes) = cx.cone_boundary().unwrap();
        assert_eq!(apexes.len(), 1);
        let apex = apexes[0];
        assert_eq!(
            coned.pseudomanifold_check().unwrap(),
            PseudomanifoldClass::Closed
        );
        // The three boundary edges 12, 13, 23 each gain the apex.
        let mut added: Vec<Vec<Vertex>> = coned
            .facets()
            .iter()
            .filter(|f| f.contains(&apex))
            .cloned()
            .collect();
        added.sort();
        assert_eq!(
            added,
            vec![vec![1, 2, apex], vec![1, 3, apex], vec![2, 3, apex]]
        );
    }

    #[test]
    fn cone_closed_is_flagged() {
        let (cx, _) = Complex::from_text(boundary_of_simplex()).unwrap();
        assert!(matches!(
            cx.cone_boundary(),
            Err(ComplexError::AlreadyClosed)
        ));
    }

    #[test]
    fn orient_boundary_simplex_alternates() {
        let (cx, _) = Complex::from_text(boundary_of_simplex()).unwrap();
        let o = orient(&cx).unwrap();
        // Facets sorted: 012, 013, 023, 123.
        assert_eq!(o.omega, vec![1, -1, 1, -1]);
        assert!(check_cycle(&cx, &o.omega));
        assert!(!check_cycle(&cx, &[1, 1, 1, 1]));
    }

    #[test]
    fn oriented_complex_from_printed_signs() {
        let text = "+ 0 1 2\n- 0 1 3\n+ 0 2 3\n- 1 2 3\n";
        let oc = OrientedComplex::from_text(text).unwrap();
        assert_eq!(oc.omega(), &[1, -1, 1, -1]);
        // A sign typo fails validation.
        assert!(OrientedComplex::from_text("+ 0 1 2\n+ 0 1 3\n+ 0 2 3\n- 1 2 3\n").is_err());
    }

    #[test]
    fn printed_signs_respect_vertex_order_within_line() {
        // `- 2 1 3` orients the odd permutation of 123: same cycle as +[123].
        let text = "- 0 1 2\n+ 0 1 3\n- 0 2 3\n+ 1 2 3\n";
        let swapped = "- 0 1 2\n+ 0 1 3\n- 0 2 3\n- 2 1 3\n";
        let a = OrientedComplex::from_text(text).unwrap();
        let b = OrientedComplex::from_text(swapped).unwrap();
        assert_eq!(a.omega(), b.omega());
    }

    #[test]
    fn orient_disk_restricts_coned_orientation() {
        let (cx, _) = Complex::from_text("0 1 2\n0 1 3\n0 2 3\n").unwrap();
        let o = orient(&cx).unwrap();
        assert!(o.coned);
        assert!(check_cycle(&cx, &o.omega));
    }
}
