//! Cross-cutting structural properties: random-input invariants via
//! proptest, and corpus-wide checks that do not fit a single module.

use num_bigint::BigInt;
use proptest::prelude::*;

use facecount::combinatorics::{binomial, theta};
use facecount::families::{corpus, FamilySpec};
use facecount::kernel::{polar_dual, product, truncate_face, Point, VPolytope};

fn integer_polytope(dim: usize, rows: &[Vec<i64>]) -> Result<VPolytope, String> {
    let points: Vec<Point> = rows.iter().map(|r| Point::from_integers(r)).collect();
    VPolytope::new(dim, points).map_err(|e| e.to_string())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Any set of random integer points that forms a valid vertex description
    // yields a lattice satisfying the alternating-sum identity, the interval
    // ("diamond") condition, and exact f-vector reversal under polarity.
    #[test]
    fn random_polytopes_are_structurally_sound(
        dim in 2usize..=3,
        extra in 0usize..=3,
        seed in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 9),
    ) {
        let n_points = dim + 1 + extra;
        let rows: Vec<Vec<i64>> = seed
            .iter()
            .take(n_points)
            .map(|r| r[..dim].to_vec())
            .collect();
        prop_assume!(rows.len() == n_points);
        let p = match integer_polytope(dim, &rows) {
            Ok(p) => p,
            // Degenerate, redundant, or repeated points: not a vertex
            // description, nothing to check.
            Err(_) => return Ok(()),
        };
        let lattice = p.face_lattice();
        prop_assert!(lattice.f_vector().euler_holds(), "alternating sum fails: {}", lattice.f_vector());
        prop_assert!(lattice.diamond_property_holds(), "diamond condition fails");
        let dual = polar_dual(&p).expect("polar dual of a valid polytope");
        prop_assert_eq!(
            dual.face_lattice().f_vector(),
            &lattice.f_vector().reversed(),
            "dual f-vector is not the reversal"
        );
    }

    // Truncating any proper face F of a simplex replaces each vertex of F
    // by its |F| * (outside count) crossing edges.
    #[test]
    fn simplex_face_truncation_vertex_count(
        d in 3usize..=5,
        mask in 1u64..=62,
    ) {
        let simplex = FamilySpec::Simplex { d: d as i64 }.build().expect("simplex builds");
        let face: Vec<usize> = (0..=d).filter(|v| mask >> v & 1 == 1).collect();
        prop_assume!(!face.is_empty() && face.len() <= d);
        let truncated = truncate_face(&simplex, &face).expect("faces of a simplex truncate");
        let f = face.len();
        let outside = d + 1 - f;
        prop_assert_eq!(truncated.n_vertices(), (f + 1) * outside);
        prop_assert!(truncated.face_lattice().f_vector().euler_holds());
    }

    // Pascal's rule on the arbitrary-precision binomials.
    #[test]
    fn binomial_satisfies_pascal_rule(n in 1i64..=120, c in 1i64..=120) {
        let lhs = binomial(n, c).expect("in domain");
        let rhs = binomial(n - 1, c - 1).expect("in domain")
            + binomial(n - 1, c).expect("in domain");
        prop_assert_eq!(lhs, rhs);
    }
}

/// Proper nonempty faces of `P x Q` are exactly the products `F x G` with
/// `F`, `G` nonempty faces (the improper top face of each factor included,
/// the full product excluded). On counts: convolve the f-vectors after
/// appending a 1 for each factor's top face.
fn convolution_check(p: &VPolytope, q: &VPolytope) {
    let augmented = |v: &VPolytope| -> Vec<BigInt> {
        let mut counts = v.face_lattice().f_vector().counts().to_vec();
        counts.push(BigInt::from(1));
        counts
    };
    let fp = augmented(p);
    let fq = augmented(q);
    let prod = product(p, q).expect("product builds");
    let got = prod.face_lattice().f_vector();
    let top = p.ambient_dim() + q.ambient_dim();
    for k in 0..top {
        let mut want = BigInt::from(0);
        for i in 0..=k {
            let j = k - i;
            if i < fp.len() && j < fq.len() {
                want += &fp[i] * &fq[j];
            }
        }
        assert_eq!(
            got.counts()[k], want,
            "f_{k} of the product disagrees with the convolution"
        );
    }
}

#[test]
fn product_counts_are_convolutions() {
    let t = |d: i64| FamilySpec::Simplex { d }.build().expect("simplex builds");
    convolution_check(&t(2), &t(3));
    convolution_check(&t(2), &t(2));
    convolution_check(&t(1), &t(2));
    convolution_check(&t(3), &t(3));
}

#[test]
fn theta_bounds_every_corpus_polytope() {
    for spec in corpus(5) {
        let p = spec.build().expect("corpus members build");
        let d = p.ambient_dim() as i64;
        if d < 2 {
            continue;
        }
        let f0 = p.n_vertices() as i64;
        let fv = p.face_lattice().f_vector();
        // Any polytope with at least d+s vertices is bounded below by the
        // theta counts at d+s vertices, for every s in range.
        for s in 1..=d.min(f0 - d) {
            for k in 1..d {
                let bound = theta(k, d + s, d).expect("in domain");
                assert!(
                    fv.counts()[k as usize] >= bound,
                    "{spec}: f_{k} = {} below theta = {bound} at s = {s}",
                    fv.counts()[k as usize]
                );
            }
        }
    }
}

#[test]
fn diamond_condition_on_the_corpus() {
    for spec in corpus(5) {
        let p = spec.build().expect("corpus members build");
        assert!(
            p.face_lattice().diamond_property_holds(),
            "{spec}: some length-two interval is not a diamond"
        );
    }
}
