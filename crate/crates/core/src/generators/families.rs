//! Programmatic facet-list families: the centrally symmetric Novik–Zheng
//! 4-spheres with their deletion balls, cross-polytope and cyclic-polytope
//! boundaries as realizable controls, and a Klein bottle triangulation as a
//! non-orientable control.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::plucker::PointConfiguration;

/// Signed vertex of the centrally symmetric families: `i` or `-i`.
type SV = i32;

fn sv_token(v: SV) -> String {
    if v < 0 {
        format!("~{}", -v)
    } else {
        format!("{v}")
    }
}

/// Canonical facet key ordering signed vertices by (magnitude, sign).
fn sv_key(f: &[SV]) -> Vec<SV> {
    let mut k = f.to_vec();
    k.sort_by_key(|&v| (v.abs(), v < 0));
    k
}

fn render_sv_facets(facets: &BTreeSet<Vec<SV>>) -> String {
    let mut out = String::new();
    for f in facets {
        let line = f.iter().map(|&v| sv_token(v)).collect::<Vec<_>>().join(" ");
        let _ = writeln!(out, "{line}");
    }
    out
}

/// The 4-dimensional Novik–Zheng sphere on vertex set {±1,…,±n} and the
/// ball whose facets a family-inductive certificate must avoid.
#[derive(Debug, Clone)]
pub struct NovikZheng {
    /// Unsigned facet-file text of the sphere Δ⁴ₙ.
    pub sphere: String,
    /// Facet-file text of ±B⁴,¹ₙ.
    pub forbidden: String,
    pub facet_count: usize,
}

/// Builds Δ⁴ₙ for n ≥ 6. The construction lists one representative of each
/// antipodal facet pair; taking the union with the negated copies yields
/// the centrally symmetric sphere (validated: closed and orientable).
pub fn novik_zheng_d4(n: i32) -> Result<NovikZheng, String> {
    if n < 6 {
        return Err(format!("need n >= 6, got {n}"));
    }
    let mut ball: Vec<Vec<SV>> = Vec::new();
    for i in 1..=(n - 4) {
        ball.push(vec![i, i + 1, n - 2, n - 1, n]);
        ball.push(vec![-i, -(i + 1), n - 2, n - 1, n]);
    }
    ball.push(vec![1, -(n - 3), n - 2, n - 1, n]);
    ball.push(vec![1, -(n - 3), -(n - 2), n - 1, n]);
    ball.push(vec![1, -(n - 3), -(n - 2), -(n - 1), n]);
    ball.push(vec![1, -(n - 3), -(n - 2), -(n - 1), -n]);

    let mut rest: Vec<Vec<SV>> = Vec::new();
    for l in 6..=n {
        for i in 1..=(l - 5) {
            rest.push(vec![i, i + 1, l - 3, l - 2, l]);
            rest.push(vec![i, i + 1, l - 3, l - 1, l]);
            rest.push(vec![-i, -(i + 1), l - 3, l - 2, l]);
            rest.push(vec![-i, -(i + 1), l - 3, l - 1, l]);
        }
        rest.push(vec![1, -l + 4, l - 3, l - 2, l]);
        rest.push(vec![1, -l + 4, l - 3, l - 1, l]);
        rest.push(vec![1, -l + 4, -l + 3, l - 2, l]);
        rest.push(vec![1, -l + 4, -l + 2, l - 1, l]);
        rest.push(vec![1, -l + 4, -l + 2, -l + 1, l]);
        rest.push(vec![1, -l + 4, -l + 3, -l + 1, l]);
        rest.push(vec![-l + 4, -l + 3, -l + 2, l - 1, l]);
        rest.push(vec![-l + 4, -l + 3, -l + 2, -l + 1, l]);
    }
    let ten: Vec<Vec<SV>> = vec![
        vec![-1, 2, -3, 4, -5],
        vec![1, 2, -3, 4, -5],
        vec![1, 2, 3, 4, -5],
        vec![1, 2, 3, -4, -5],
        vec![1, -2, -3, 4, -5],
        vec![1, -2, 3, 4, -5],
        vec![1, -2, 3, -4, -5],
        vec![-1, -2, -3, 4, -5],
        vec![-1, -2, 3, 4, -5],
        vec![-1, -2, 3, -4, -5],
    ];

    let close = |fs: &[Vec<SV>]| -> BTreeSet<Vec<SV>> {
        let mut set = BTreeSet::new();
        for f in fs {
            set.insert(sv_key(f));
            let neg: Vec<SV> = f.iter().map(|&v| -v).collect();
            set.insert(sv_key(&neg));
        }
        set
    };

    let mut sphere_facets: Vec<Vec<SV>> = Vec::new();
    sphere_facets.extend(ball.iter().cloned());
    sphere_facets.extend(rest);
    sphere_facets.extend(ten);
    let sphere_set = close(&sphere_facets);
    let ball_set = close(&ball);

    Ok(NovikZheng {
        facet_count: sphere_set.len(),
        sphere: render_sv_facets(&sphere_set),
        forbidden: render_sv_facets(&ball_set),
    })
}

/// Boundary of the d-dimensional cross-polytope: one vertex pair ±i per
/// axis, facets are all sign patterns.
pub fn cross_polytope_boundary(d: u32) -> String {
    let mut out = String::new();
    for mask in 0..(1u32 << d) {
        let line = (1..=d)
            .map(|i| {
                let v = if mask & (1 << (i - 1)) != 0 {
                    -(i as SV)
                } else {
                    i as SV
                };
                sv_token(v)
            })
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "{line}");
    }
    out
}

/// Facets of the cyclic polytope C(d, n) by Gale's evenness condition:
/// a d-subset S of {0,…,n-1} is a facet iff any two elements outside S
/// are separated by an even number of elements of S.
pub fn cyclic_polytope_boundary(d: usize, n: usize) -> String {
    let mut out = String::new();
    let mut facet = vec![0usize; d];
    fn rec(
        start: usize,
        depth: usize,
        d: usize,
        n: usize,
        facet: &mut Vec<usize>,
        out: &mut String,
    ) {
        if depth == d {
            // evenness: for every i < j not in the facet, the count of
            // facet elements strictly between them is even.
            let inside = |x: usize, f: &[usize]| f.contains(&x);
            for i in 0..n {
                if inside(i, facet) {
                    continue;
                }
                for j in (i + 1)..n {
                    if inside(j, facet) {
                        continue;
                    }
                    let between = facet.iter().filter(|&&k| i < k && k < j).count();
                    if between % 2 != 0 {
                        return;
                    }
                }
            }
            let line = facet
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let _ = writeln!(out, "{line}");
            return;
        }
        for x in start..n {
            facet[depth] = x;
            rec(x + 1, depth + 1, d, n, facet, out);
        }
    }
    rec(0, 0, d, n, &mut facet, &mut out);
    out
}

/// Homogeneous moment-curve coordinates realizing the cyclic polytope
/// C(height-1, n) with parameters t = 0..n.
pub fn moment_curve_configuration(height: usize, n: usize) -> PointConfiguration {
    let params: Vec<i64> = (0..n as i64).collect();
    PointConfiguration::moment_curve(height, &params)
}

/// 9-vertex triangulation of the Klein bottle: the 3×3 grid square with a
/// torus identification in one direction and a reflected one in the other.
pub fn klein_bottle() -> String {
    fn v(mut x: usize, mut y: usize) -> usize {
        if y == 3 {
            y = 0;
        }
        if x == 3 {
            x = 0;
            y = (3 - y) % 3;
        }
        3 * y + x
    }
    let mut out = String::new();
    for cx in 0..3 {
        for cy in 0..3 {
            let (a, b, c, d) = (v(cx, cy), v(cx + 1, cy), v(cx, cy + 1), v(cx + 1, cy + 1));
            let _ = writeln!(out, "{a} {b} {d}");
            let _ = writeln!(out, "{a} {d} {c}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{orient, Complex, ComplexError, PseudomanifoldClass};

    #[test]
    fn klein_bottle_is_closed_but_not_orientable() {
        let (cx, _) = Complex::from_text(&klein_bottle()).unwrap();
        assert_eq!(cx.f_vector(), vec![9, 27, 18]);
        assert_eq!(
            cx.pseudomanifold_check().unwrap(),
            PseudomanifoldClass::Closed
        );
        assert!(matches!(orient(&cx), Err(ComplexError::NotOrientable(_))));
    }

    #[test]
    fn cross_polytope_counts() {
        let (cx, _) = Complex::from_text(&cross_polytope_boundary(4)).unwrap();
        assert_eq!(cx.f_vector(), vec![8, 24, 32, 16]);
        assert_eq!(
            cx.pseudomanifold_check().unwrap(),
            PseudomanifoldClass::Closed
        );
    }

    #[test]
    fn cyclic_4_8_has_twenty_facets() {
        let text = cyclic_polytope_boundary(4, 8);
        assert_eq!(text.lines().count(), 20);
        let (cx, _) = Complex::from_text(&text).unwrap();
        assert_eq!(
            cx.pseudomanifold_check().unwrap(),
            PseudomanifoldClass::Closed
        );
    }

    #[test]
    fn novik_zheng_small_cases() {
        let nz6 = novik_zheng_d4(6).unwrap();
        assert_eq!(nz6.facet_count, 60);
        let (cx, _) = Complex::from_text(&nz6.sphere).unwrap();
        assert_eq!(
            cx.pseudomanifold_check().unwrap(),
            PseudomanifoldClass::Closed
        );
        assert!(orient(&cx).is_ok());

        assert!(novik_zheng_d4(5).is_err());
    }
}
