//! Property suites runnable without any search: elimination order
//! independence, normal-form well-definedness, relation vanishing on exact
//! rational configurations, solver-vs-exhaustive equality on synthetic
//! instances, and ring axioms.

use num_traits::Zero;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use pluckertree::certificate::evaluate_tree;
use pluckertree::complex::OrientedComplex;
use pluckertree::generators::{self, RefCert};
use pluckertree::gpgraph::Edge;
use pluckertree::plucker::{
    make_relation, CertPolynomial, Monomial, PointConfiguration,
};
use pluckertree::search::{
    build_ip, index_tree_check, solve_bnb, IndexOutcome, IndexSelection, IpInstance, SearchLimits,
};
use pluckertree::solids::SolidTable;
use pluckertree::Vertex;

fn load(cert: RefCert) -> (OrientedComplex, Vec<Vec<Vertex>>) {
    let (text, forb): (String, Option<String>) = match cert.dataset_name() {
        Some(name) => (
            generators::dataset(name).unwrap().text,
            cert.forbidden_name()
                .map(|f| generators::forbidden_list(f).unwrap().to_owned()),
        ),
        None => {
            let nz = generators::novik_zheng_d4(7).unwrap();
            (nz.sphere, Some(nz.forbidden))
        }
    };
    let cx = OrientedComplex::from_text(&text).unwrap();
    let forbidden = forb
        .map(|t| generators::parse_forbidden(&cx, &t).unwrap())
        .unwrap_or_default();
    (cx, forbidden)
}

/// Twenty random elimination orders per shipped tree produce the same
/// final polynomial, including orders that eliminate interior edges first.
#[test]
fn elimination_is_order_independent() {
    let mut rng = StdRng::seed_from_u64(2024);
    for cert in RefCert::all() {
        let (cx, forbidden) = load(cert);
        let st = SolidTable::new(&cx, &forbidden).unwrap();
        let tree = generators::tree_for(&st, cert).unwrap();
        let reference = evaluate_tree(&tree, None).unwrap().final_poly;
        let mut order: Vec<usize> = (0..tree.edges.len()).collect();
        for _ in 0..20 {
            order.shuffle(&mut rng);
            let elim = evaluate_tree(&tree, Some(&order)).unwrap();
            assert_eq!(
                elim.final_poly, reference,
                "{cert:?}: order {order:?} changed the certificate"
            );
        }
    }
}

/// Every solid determined by two or more facets has a facet-independent
/// normal-form signature, exhaustively over all shipped complexes.
#[test]
fn normal_form_well_definedness_exhaustive() {
    for ds in generators::catalog() {
        if ds.name == "klein-bottle" {
            continue;
        }
        let cx = ds.load().unwrap();
        let st = SolidTable::new(&cx, &[]).unwrap();
        let mut multi = 0usize;
        for id in 0..st.len() as u32 {
            if st.determining_facets(id).len() >= 2 {
                multi += 1;
                assert!(
                    st.well_definedness_check(id),
                    "{}: solid {} has facet-dependent signature",
                    ds.name,
                    st.render(id)
                );
            }
        }
        assert!(multi > 0, "{}: no multi-determined solids exercised", ds.name);
    }
}

/// 200 random admissible relations per dataset evaluate to exactly zero on
/// random rational configurations.
#[test]
fn random_relations_vanish_exactly() {
    let mut rng = StdRng::seed_from_u64(7);
    for ds in generators::catalog() {
        if ds.name == "klein-bottle" {
            continue;
        }
        let cx = ds.load().unwrap();
        let d = cx.d();
        if cx.n() < d + 3 {
            continue;
        }
        let st = SolidTable::new(&cx, &[]).unwrap();
        let verts: Vec<Vertex> = (0..cx.n() as Vertex).collect();
        let mut tested = 0;
        while tested < 200 {
            let mut pool = verts.clone();
            pool.shuffle(&mut rng);
            let s: Vec<Vertex> = pool[..d - 1].to_vec();
            let mut quad: [Vertex; 4] = pool[d - 1..d + 3].try_into().unwrap();
            quad.sort_unstable();
            let rel = make_relation(&st, &s, &quad, 1).unwrap();
            if !rel.admissible(&st) {
                continue;
            }
            tested += 1;
            let p = CertPolynomial::from_relation(&rel);
            let x = PointConfiguration::random(d + 1, cx.n(), &mut rng);
            let v = p.evaluate(&st, &x).unwrap();
            assert!(v.is_zero(), "{}: {} nonzero: {v}", ds.name, rel.render(&st));
        }
    }
}

// ---------------------------------------------------------------------------
// Solver vs exhaustive enumeration on synthetic instances
// ---------------------------------------------------------------------------

/// Brute-force reference: smallest selection satisfying all four constraint
/// families and the tree conditions, by complete enumeration.
fn oracle_optimum(instance: &IpInstance) -> Option<usize> {
    let n = instance.node_count;
    let mut best: Option<usize> = None;
    for node_mask in 1u32..(1 << n) {
        let nodes: Vec<u32> = (0..n as u32).filter(|&i| node_mask & (1 << i) != 0).collect();
        if let Some(b) = best {
            if nodes.len() >= b {
                continue;
            }
        }
        let edge_ids: Vec<usize> = instance
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| nodes.contains(&e.a) && nodes.contains(&e.b))
            .map(|(i, _)| i)
            .collect();
        if edge_ids.len() > 20 {
            panic!("oracle instance too large");
        }
        for edge_mask in 0u32..(1 << edge_ids.len()) {
            let edges: Vec<Edge> = edge_ids
                .iter()
                .enumerate()
                .filter(|(j, _)| edge_mask & (1 << *j as u32) != 0)
                .map(|(_, &ei)| instance.edges[ei])
                .collect();
            let sel = IndexSelection {
                nodes: nodes.clone(),
                edges,
            };
            if index_tree_check(instance, &sel).is_ok() {
                best = Some(nodes.len());
                break;
            }
        }
    }
    best
}

fn random_instance(rng: &mut StdRng) -> IpInstance {
    let n = rng.gen_range(2..=9usize);
    let colors: Vec<u32> = (100..100 + rng.gen_range(2..6u32)).collect();
    let node_unknowns: Vec<Vec<u32>> = (0..n)
        .map(|_| {
            let k = rng.gen_range(0..=2usize);
            let mut u: Vec<u32> = (0..k)
                .map(|_| colors[rng.gen_range(0..colors.len())])
                .collect();
            u.sort_unstable();
            u.dedup();
            u
        })
        .collect();
    let mut edges = Vec::new();
    for _ in 0..rng.gen_range(1..=14usize) {
        let a = rng.gen_range(0..n as u32);
        let b = rng.gen_range(0..n as u32);
        if a == b {
            continue;
        }
        // Mostly demand-covering edges, some with unrelated colors.
        let color = if rng.gen_bool(0.8) && !node_unknowns[a as usize].is_empty() {
            node_unknowns[a as usize][rng.gen_range(0..node_unknowns[a as usize].len())]
        } else {
            colors[rng.gen_range(0..colors.len())]
        };
        edges.push(Edge {
            color,
            a: a.min(b),
            b: a.max(b),
        });
    }
    edges.sort();
    edges.dedup();
    IpInstance {
        node_count: n,
        node_unknowns,
        edges,
    }
}

/// The exact branch-and-bound agrees with complete enumeration on random
/// synthetic instances.
#[test]
fn bnb_matches_exhaustive_on_synthetic_instances() {
    let mut rng = StdRng::seed_from_u64(99);
    let mut feasible_seen = 0;
    for trial in 0..60 {
        let instance = random_instance(&mut rng);
        let expected = oracle_optimum(&instance);
        let mut model = build_ip(instance);
        let outcome = solve_bnb(&mut model, &SearchLimits::default());
        match (expected, outcome) {
            (Some(k), IndexOutcome::Optimal(sel)) => {
                assert_eq!(sel.nodes.len(), k, "trial {trial}: optimum mismatch");
                assert!(index_tree_check(&model.instance, &sel).is_ok());
                feasible_seen += 1;
            }
            (None, IndexOutcome::Infeasible) => {}
            (e, o) => panic!("trial {trial}: oracle {e:?} vs solver {o:?}"),
        }
    }
    assert!(feasible_seen >= 10, "too few feasible instances exercised");
}

proptest! {
    /// Signature is computed as the inversion parity; cross-check against
    /// an independent cycle-decomposition parity on random permutations.
    #[test]
    fn signature_matches_cycle_parity(perm in proptest::sample::subsequence((0u8..12).collect::<Vec<_>>(), 2..9).prop_shuffle()) {
        let eps = pluckertree::complex::permutation_signature(&perm).unwrap();
        // parity via cycle decomposition of the sorting permutation
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        let target: Vec<usize> = perm.iter().map(|v| sorted.iter().position(|w| w == v).unwrap()).collect();
        let mut seen = vec![false; target.len()];
        let mut transpositions = 0usize;
        for start in 0..target.len() {
            if seen[start] { continue; }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = target[x];
                len += 1;
            }
            transpositions += len - 1;
        }
        let expected = if transpositions.is_multiple_of(2) { 1 } else { -1 };
        prop_assert_eq!(eps, expected);
    }

    /// Ring axioms of the certificate polynomials on random sparse inputs:
    /// distributivity and commutativity, and scale_monomial against mul.
    #[test]
    fn polynomial_ring_axioms(
        a in poly_strategy(),
        b in poly_strategy(),
        c in poly_strategy(),
    ) {
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        prop_assert_eq!(&ab, &ba);
        let left = a.add(&b).mul(&c);
        let right = a.mul(&c).add(&b.mul(&c));
        prop_assert_eq!(left, right);
        let zero = a.add(&a.neg());
        prop_assert!(zero.is_zero());
    }
}

fn poly_strategy() -> impl Strategy<Value = CertPolynomial> {
    proptest::collection::vec(
        (
            proptest::collection::vec(0u32..6, 0..3),
            -4i64..=4,
        ),
        0..4,
    )
    .prop_map(|terms| {
        let mut p = CertPolynomial::zero();
        for (vars, c) in terms {
            p.add_term(Monomial::from_vars(vars), num_bigint::BigInt::from(c));
        }
        p
    })
}

/// scale_monomial is multiplication by a monomial, checked against mul.
#[test]
fn scale_monomial_matches_mul() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..50 {
        let mut p = CertPolynomial::zero();
        for _ in 0..rng.gen_range(0..5) {
            let vars: Vec<u32> = (0..rng.gen_range(0..3)).map(|_| rng.gen_range(0..8)).collect();
            p.add_term(
                Monomial::from_vars(vars),
                num_bigint::BigInt::from(rng.gen_range(-3i64..=3)),
            );
        }
        let mono = Monomial::from_vars(
            (0..rng.gen_range(0..3)).map(|_| rng.gen_range(0..8)).collect(),
        );
        let coeff = num_bigint::BigInt::from(rng.gen_range(-3i64..=3));
        let mut q = CertPolynomial::zero();
        q.add_term(mono.clone(), coeff.clone());
        assert_eq!(p.scale_monomial(&mono, &coeff), p.mul(&q));
    }
}

/// Permuting the quadruple multiplies the relation by the permutation
/// signature, term by term.
#[test]
fn relation_sign_flip_law() {
    let ds = generators::dataset("example-1.1").unwrap();
    let cx = ds.load().unwrap();
    let st = SolidTable::new(&cx, &[]).unwrap();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let mut pool: Vec<Vertex> = (0..8).collect();
        pool.shuffle(&mut rng);
        let s = &pool[..3];
        let quad: [Vertex; 4] = pool[3..7].try_into().unwrap();
        let mut sorted = quad;
        sorted.sort_unstable();
        let eps = pluckertree::complex::permutation_signature(&quad).unwrap();
        let base = make_relation(&st, s, &sorted, 1).unwrap();
        let permuted = make_relation(&st, s, &quad, 1).unwrap();
        assert_eq!(permuted.sign, eps * base.sign);
        for (tp, tb) in permuted.terms.iter().zip(base.terms.iter()) {
            assert_eq!((tp.a, tp.b), (tb.a, tb.b));
            assert_eq!(tp.coeff, eps * tb.coeff);
        }
    }
}
