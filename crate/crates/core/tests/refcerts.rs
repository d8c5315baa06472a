//! The shipped certificates: every reference tree validates, eliminates to
//! its published final polynomial, passes the full verification, and
//! breaks loudly under mutation.

use pluckertree::certificate::{
    evaluate_tree, positivity_check, verify, CertificateFile, ComplexRef, MetaSpec, Positivity,
};
use pluckertree::complex::OrientedComplex;
use pluckertree::content_hash;
use pluckertree::generators::{self, RefCert};
use pluckertree::gpgraph::TreeSelection;
use pluckertree::solids::SolidTable;

type Context = (OrientedComplex, Vec<Vec<u8>>, String, Option<Vec<Vec<String>>>);

/// Loads the complex, forbidden list, and facet text for a certificate.
fn context(cert: RefCert) -> Context {
    let (text, forb_text): (String, Option<String>) = match cert.dataset_name() {
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
    let forbidden = forb_text
        .as_ref()
        .map(|t| generators::parse_forbidden(&cx, t).unwrap())
        .unwrap_or_default();
    let forb_tokens = forb_text.map(|t| {
        t.lines()
            .filter_map(|l| {
                let l = l.split('#').next().unwrap_or("");
                let toks: Vec<String> = l.split_whitespace().map(|s| s.to_owned()).collect();
                if toks.is_empty() {
                    None
                } else {
                    Some(toks)
                }
            })
            .collect::<Vec<_>>()
    });
    (cx, forbidden, text, forb_tokens)
}

fn certificate_file(
    cert: RefCert,
    st: &SolidTable,
    tree: &TreeSelection,
    text: &str,
    forb_tokens: Option<Vec<Vec<String>>>,
) -> CertificateFile {
    let elim = evaluate_tree(tree, None).unwrap();
    let runtime = pluckertree::certificate::Certificate {
        tree: tree.clone(),
        final_poly: elim.final_poly,
        kappas: elim.kappas,
    };
    let mut file = CertificateFile::from_certificate(
        st,
        &runtime,
        cert.label(),
        &content_hash(text),
        forb_tokens,
        MetaSpec {
            tool: "pluckertree-tests".to_owned(),
            seed: 0,
            solver: "shipped".to_owned(),
        },
    );
    file.complex = ComplexRef {
        name: cert.label().to_owned(),
        hash: content_hash(text),
    };
    file
}

#[test]
fn reference_trees_reproduce_published_finals() {
    for cert in RefCert::all() {
        let (cx, forbidden, _text, _) = context(cert);
        let st = SolidTable::new(&cx, &forbidden).unwrap();
        let tree = generators::tree_for(&st, cert)
            .unwrap_or_else(|e| panic!("{:?}: {e}", cert));
        let elim = evaluate_tree(&tree, None).unwrap();
        assert!(
            matches!(positivity_check(&st, &elim.final_poly), Positivity::Positive(_)),
            "{cert:?}: final polynomial not positive"
        );
        for rel in &tree.nodes {
            assert!(rel.admissible(&st), "{cert:?}: inadmissible node");
        }
        if let Some(fixture) = cert.final_fixture() {
            let published = generators::resolve_final(&st, fixture).unwrap();
            assert_eq!(
                elim.final_poly, published,
                "{cert:?}: eliminated polynomial differs from the published one"
            );
        }
    }
}

#[test]
fn reference_certificates_verify_end_to_end() {
    for cert in RefCert::all() {
        let (cx, forbidden, text, forb_tokens) = context(cert);
        let st = SolidTable::new(&cx, &forbidden).unwrap();
        let tree = generators::tree_for(&st, cert).unwrap();
        let file = certificate_file(cert, &st, &tree, &text, forb_tokens);
        let report = verify(&text, &file, 42);
        assert!(
            report.passed(),
            "{cert:?}: verification failed at {:?}",
            report.first_failure()
        );
        // Round-trips through JSON.
        let json = file.to_json();
        let file2 = CertificateFile::from_json(&json).unwrap();
        assert!(verify(&text, &file2, 43).passed(), "{cert:?}: after JSON");
    }
}

#[test]
fn family_certificate_requires_its_forbidden_list_semantics() {
    // The unrestricted Δ³₆ certificate involves a solid determined only by
    // a forbidden facet, so it must fail verification under the family's
    // forbidden list, while the family certificate passes (checked above).
    let (cx, _, text, _) = context(RefCert::JockuschD36);
    let st_plain = SolidTable::new(&cx, &[]).unwrap();
    let tree = generators::tree_for(&st_plain, RefCert::JockuschD36).unwrap();
    let forb_tokens: Vec<Vec<String>> = generators::forbidden_list("jockusch-d3-6")
        .unwrap()
        .lines()
        .filter_map(|l| {
            let toks: Vec<String> = l
                .split('#')
                .next()
                .unwrap_or("")
                .split_whitespace()
                .map(|s| s.to_owned())
                .collect();
            if toks.is_empty() {
                None
            } else {
                Some(toks)
            }
        })
        .collect();
    let file = certificate_file(
        RefCert::JockuschD36,
        &st_plain,
        &tree,
        &text,
        Some(forb_tokens),
    );
    let report = verify(&text, &file, 7);
    assert!(
        !report.passed(),
        "unrestricted certificate must not survive the forbidden list"
    );
}

#[test]
fn mutated_certificates_fail() {
    let (cx, forbidden, text, forb_tokens) = context(RefCert::JockuschD36);
    let st = SolidTable::new(&cx, &forbidden).unwrap();
    let tree = generators::tree_for(&st, RefCert::JockuschD36).unwrap();
    let file = certificate_file(RefCert::JockuschD36, &st, &tree, &text, forb_tokens);
    assert!(verify(&text, &file, 1).passed());

    // Flipping one stored coefficient breaks re-elimination and vanishing.
    let mut broken = file.clone();
    broken.final_polynomial[0].coeff = "-1".to_owned();
    let report = verify(&text, &broken, 1);
    assert!(!report.passed());
    let failed: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name)
        .collect();
    assert!(failed.contains(&"elimination"), "failed: {failed:?}");

    // Transposing two vertices inside one stored solid flips its sign.
    let mut twisted = file.clone();
    twisted.final_polynomial[0].monomial[0].swap(0, 1);
    let report = verify(&text, &twisted, 1);
    assert!(!report.passed());

    // A certificate verified against the wrong complex fails immediately.
    let other = generators::dataset("zheng-Z").unwrap().text;
    let report = verify(&other, &file, 1);
    assert!(!report.passed());
    assert_eq!(report.checks[0].name, "complex");
    assert!(!report.checks[0].passed);
}

#[test]
fn cross_prismatoid_certificates_do_not_verify() {
    let (_, _, text_2669, _) = context(RefCert::Prismatoid2669);
    let (cx_3513, forbidden, text_3513, forb_tokens) = context(RefCert::Prismatoid3513);
    let st = SolidTable::new(&cx_3513, &forbidden).unwrap();
    let tree = generators::tree_for(&st, RefCert::Prismatoid3513).unwrap();
    let file = certificate_file(
        RefCert::Prismatoid3513,
        &st,
        &tree,
        &text_3513,
        forb_tokens,
    );
    let report = verify(&text_2669, &file, 5);
    assert!(!report.passed(), "mismatched complex must fail");
}

#[test]
fn example_relation_is_all_positive() {
    use pluckertree::solids::FuzzySign;
    let (cx, _, _, _) = context(RefCert::Example);
    let st = SolidTable::new(&cx, &[]).unwrap();
    let tree = generators::tree_for(&st, RefCert::Example).unwrap();
    let rel = &tree.nodes[0];
    assert!(rel
        .terms
        .iter()
        .all(|t| t.sigma == FuzzySign::Plus && st.known(t.a) && st.known(t.b)));
}
