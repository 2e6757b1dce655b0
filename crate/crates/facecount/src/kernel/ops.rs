//! Constructions on exact polytopes: pyramids, products, free sums, polars,
//! and face truncation.
//!
//! Every operation returns a freshly validated [`VPolytope`], so the output
//! of a construction is certified by the same facet scan and irredundancy
//! check as direct input. That costs a re-scan per operation but means no
//! construction can silently produce a non-polytope.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::FaceCountVector;

use super::polytope::{Point, VPolytope};
use super::KernelError;

/// The pyramid over `p`: the base embedded at height zero with a new apex at
/// unit height. Base vertices keep their indices; the apex comes last.
pub fn pyramid(p: &VPolytope) -> Result<VPolytope, KernelError> {
    let d = p.ambient_dim();
    let mut vertices: Vec<Point> = p
        .vertices()
        .iter()
        .map(|v| {
            let mut c = v.coords().to_vec();
            c.push(BigRational::zero());
            Point::new(c)
        })
        .collect();
    let mut apex = vec![BigRational::zero(); d + 1];
    apex[d] = BigRational::one();
    vertices.push(Point::new(apex));
    VPolytope::new(d + 1, vertices)
}

/// The `k`-fold iterated pyramid over `p`; `k = 0` returns a copy of `p`.
pub fn k_fold_pyramid(p: &VPolytope, k: usize) -> Result<VPolytope, KernelError> {
    let mut out = p.clone();
    for _ in 0..k {
        out = pyramid(&out)?;
    }
    Ok(out)
}

/// The cartesian product `p x q`. Vertex `(i, j)` of the product sits at
/// index `i * q.n_vertices() + j`.
pub fn product(p: &VPolytope, q: &VPolytope) -> Result<VPolytope, KernelError> {
    let mut vertices = Vec::with_capacity(p.n_vertices() * q.n_vertices());
    for u in p.vertices() {
        for v in q.vertices() {
            let mut c = u.coords().to_vec();
            c.extend_from_slice(v.coords());
            vertices.push(Point::new(c));
        }
    }
    VPolytope::new(p.ambient_dim() + q.ambient_dim(), vertices)
}

/// The free (direct) sum `p # q`: each summand is translated so its centroid
/// sits at the origin, then embedded in complementary coordinate subspaces.
/// Vertices of `p` come first, then vertices of `q`.
pub fn direct_sum(p: &VPolytope, q: &VPolytope) -> Result<VPolytope, KernelError> {
    let (dp, dq) = (p.ambient_dim(), q.ambient_dim());
    let cp = p.centroid();
    let cq = q.centroid();
    let mut vertices = Vec::with_capacity(p.n_vertices() + q.n_vertices());
    for u in p.vertices() {
        let mut c: Vec<BigRational> = u
            .coords()
            .iter()
            .zip(cp.coords())
            .map(|(x, t)| x - t)
            .collect();
        c.extend(std::iter::repeat_with(BigRational::zero).take(dq));
        vertices.push(Point::new(c));
    }
    for v in q.vertices() {
        let mut c: Vec<BigRational> =
            std::iter::repeat_with(BigRational::zero).take(dp).collect();
        c.extend(v.coords().iter().zip(cq.coords()).map(|(x, t)| x - t));
        vertices.push(Point::new(c));
    }
    VPolytope::new(dp + dq, vertices)
}

/// The polar dual of `p`, taken with respect to its centroid. Each facet
/// `n . x <= b` of `p` becomes the dual vertex `n / (b - n . c)`, so the
/// dual's face vector is the reverse of `p`'s.
pub fn polar_dual(p: &VPolytope) -> Result<VPolytope, KernelError> {
    let c = p.centroid();
    let vertices: Vec<Point> = p
        .facets()
        .iter()
        .map(|f| {
            let h = &f.hyperplane;
            let mut depth = BigRational::from(h.offset().clone());
            for (n, x) in h.normal().iter().zip(c.coords()) {
                depth -= BigRational::from(n.clone()) * x;
            }
            // The centroid is interior, so every facet has positive depth.
            assert!(
                depth > BigRational::zero(),
                "centroid must lie strictly inside every facet"
            );
            Point::new(
                h.normal()
                    .iter()
                    .map(|n| BigRational::from(n.clone()) / &depth)
                    .collect(),
            )
        })
        .collect();
    VPolytope::new(p.ambient_dim(), vertices)
}

/// Truncate the face with vertex indices `face` at the default cutting depth
/// of one half.
pub fn truncate_face(p: &VPolytope, face: &[usize]) -> Result<VPolytope, KernelError> {
    truncate_face_at(p, face, 1, 2)
}

/// Truncate a proper face of `p`: slice off exactly the vertices of the face
/// with a hyperplane that leaves every other vertex strictly inside.
///
/// The cutting direction is the sum of the outward normals of the facets
/// containing the face, which exposes the face and nothing more. The depth
/// parameter `num / den` must lie strictly between 0 and 1: near 0 the cut
/// hugs the surviving vertices, near 1 it hugs the removed face. All choices
/// produce the same combinatorial type; the parameter only moves coordinates.
///
/// New vertices are the kept originals (in their input order) followed by
/// one crossing point per edge joining the face to the rest, in edge order.
pub fn truncate_face_at(
    p: &VPolytope,
    face: &[usize],
    num: i64,
    den: i64,
) -> Result<VPolytope, KernelError> {
    if p.ambient_dim() < 2 {
        return Err(KernelError::UnsupportedDimension { needs: 2 });
    }
    if den <= 0 || num <= 0 || num >= den {
        return Err(KernelError::BadThreshold { num, den });
    }
    let n = p.n_vertices();
    let mut face_mask = 0u64;
    for &v in face {
        p.check_vertex_index(v)?;
        face_mask |= 1 << v;
    }
    if face_mask == 0 {
        return Err(KernelError::NotAFace);
    }
    let lattice = p.face_lattice();
    if lattice.grade_of(face_mask).is_none() {
        return Err(KernelError::NotAFace);
    }

    // Cutting direction: sum of outward normals of the facets through the
    // face. Constant on the face, strictly smaller on every other vertex.
    let d = p.ambient_dim();
    let mut direction = vec![BigInt::zero(); d];
    for f in p.facets() {
        if face.iter().all(|v| f.vertex_set.contains(v)) {
            for (acc, x) in direction.iter_mut().zip(f.hyperplane.normal()) {
                *acc += x;
            }
        }
    }
    let height = |v: usize| -> BigRational {
        let mut acc = BigRational::zero();
        for (n, x) in direction.iter().zip(p.vertices()[v].coords()) {
            acc += BigRational::from(n.clone()) * x;
        }
        acc
    };

    let face_height = height(face[0]);
    let kept: Vec<usize> = (0..n).filter(|&v| face_mask & (1 << v) == 0).collect();
    if kept.is_empty() {
        return Err(KernelError::TruncatesEverything);
    }
    let outside_height = kept
        .iter()
        .map(|&v| height(v))
        .max()
        .expect("kept set is nonempty");
    debug_assert!(
        face
            .iter()
            .all(|&v| height(v) == face_height),
        "the cutting direction must be constant on the face"
    );
    assert!(
        outside_height < face_height,
        "the cutting direction must expose exactly the chosen face"
    );

    let lambda = BigRational::new(BigInt::from(num), BigInt::from(den));
    let threshold = &outside_height + lambda * (&face_height - &outside_height);

    let mut vertices: Vec<Point> = kept
        .iter()
        .map(|&v| p.vertices()[v].clone())
        .collect();
    for &edge in lattice.faces(1) {
        let inside = edge & face_mask;
        let outside = edge & !face_mask;
        if inside.count_ones() == 1 && outside.count_ones() == 1 {
            let u = inside.trailing_zeros() as usize;
            let w = outside.trailing_zeros() as usize;
            let hu = height(u);
            let hw = height(w);
            // hu = face height > threshold > hw, so the crossing ratio is in
            // (0, 1).
            let ratio = (&hu - &threshold) / (&hu - &hw);
            let crossing: Vec<BigRational> = p.vertices()[u]
                .coords()
                .iter()
                .zip(p.vertices()[w].coords())
                .map(|(a, b)| a + &ratio * (b - a))
                .collect();
            vertices.push(Point::new(crossing));
        }
    }
    VPolytope::new(d, vertices)
}

/// Number of edges of `p` through vertex `v`. A 1-dimensional polytope has
/// no proper edges; each endpoint is adjacent to the other through the
/// segment itself, so its degree is 1.
pub fn vertex_degree(p: &VPolytope, v: usize) -> Result<usize, KernelError> {
    p.check_vertex_index(v)?;
    if p.ambient_dim() == 1 {
        return Ok(1);
    }
    Ok(p
        .face_lattice()
        .faces(1)
        .iter()
        .filter(|&&e| e & (1 << v) != 0)
        .count())
}

/// Whether vertex `v` is simple: incident to exactly `dim` facets. For a
/// polytope this is equivalent to having edge degree `dim`, and the
/// equivalence is asserted on every call.
pub fn is_simple_vertex(p: &VPolytope, v: usize) -> Result<bool, KernelError> {
    p.check_vertex_index(v)?;
    let d = p.ambient_dim();
    let facet_count = p.vertex_facet_masks[v].count_ones() as usize;
    let degree = vertex_degree(p, v)?;
    assert_eq!(
        facet_count == d,
        degree == d,
        "vertex {v}: facet count {facet_count} and edge degree {degree} must agree on simplicity"
    );
    Ok(facet_count == d)
}

/// The face vector of the vertex figure of `v`: entry `k` counts the
/// `(k + 1)`-dimensional faces of `p` through `v`. Needs `dim >= 2` so the
/// figure is itself a polytope with a face vector.
pub fn vertex_figure_counts(p: &VPolytope, v: usize) -> Result<FaceCountVector, KernelError> {
    p.check_vertex_index(v)?;
    if p.ambient_dim() < 2 {
        return Err(KernelError::UnsupportedDimension { needs: 2 });
    }
    let lattice = p.face_lattice();
    let counts: Vec<i64> = (1..p.ambient_dim())
        .map(|g| {
            lattice
                .faces(g)
                .iter()
                .filter(|&&m| m & (1 << v) != 0)
                .count() as i64
        })
        .collect();
    Ok(FaceCountVector::realized_from(p.ambient_dim() - 1, &counts)
        .expect("a vertex figure has a valid face vector"))
}
