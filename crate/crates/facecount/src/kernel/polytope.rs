//! The exact vertex-presented polytope type.
//!
//! A [`VPolytope`] is a full-dimensional polytope given by its vertex list
//! with `BigRational` coordinates. Construction is where all the honesty
//! lives: the constructor computes the facets by brute force over every
//! `d`-element vertex subset, then uses them to certify that the input is
//! irredundant — a point inside the hull of the others is an error, never
//! silently dropped. Everything downstream (face lattice, dual, truncation)
//! builds on those certified facets.

use std::collections::HashSet;
use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::lattice::FaceLattice;
use super::numeric::{dot, integer_rank, null_space_vector, reduce_content, sign_normalize};
use super::KernelError;

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<BigRational>,
}

impl Point {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self {
            coords: coords
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }
}

/// An oriented integer hyperplane `normal · x <= offset`, stored with
/// coefficient content 1. For a facet the polytope lies entirely on the
/// `<=` side, with equality exactly on the facet's vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Hyperplane {
    fn reduced(mut normal: Vec<BigInt>, offset: BigInt) -> Self {
        let mut all = normal.clone();
        all.push(offset);
        reduce_content(&mut all);
        let offset = all.pop().expect("offset slot");
        normal = all;
        Self { normal, offset }
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    /// `offset - normal · p`: nonnegative on the polytope, zero exactly on
    /// the supporting facet.
    pub fn slack(&self, p: &Point) -> BigRational {
        let mut acc = BigRational::from(self.offset.clone());
        for (n, x) in self.normal.iter().zip(p.coords()) {
            acc -= BigRational::from(n.clone()) * x;
        }
        acc
    }

    /// The sign-normalized coefficient vector `(normal, offset)` with a
    /// positive first nonzero entry — the dedupe key that identifies the
    /// hyperplane regardless of orientation.
    pub fn canonical_key(&self) -> Vec<BigInt> {
        let mut key = self.normal.clone();
        key.push(self.offset.clone());
        sign_normalize(&mut key);
        key
    }
}

/// A facet: its supporting hyperplane plus the sorted indices of the
/// vertices lying on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub hyperplane: Hyperplane,
    pub vertex_set: Vec<usize>,
}

/// A full-dimensional polytope presented by its vertices.
#[derive(Debug)]
pub struct VPolytope {
    ambient_dim: usize,
    vertices: Vec<Point>,
    /// Vertex coordinates multiplied by the common denominator `scale`, so
    /// all exact elimination runs over integers.
    pub(crate) scaled: Vec<Vec<BigInt>>,
    pub(crate) scale: BigInt,
    facets: Vec<Facet>,
    /// Bit `i` of `facet_masks[j]`: vertex `i` lies on facet `j`.
    pub(crate) facet_masks: Vec<u64>,
    /// Bit `j` of `vertex_facet_masks[i]`: vertex `i` lies on facet `j`.
    pub(crate) vertex_facet_masks: Vec<u64>,
    lattice: OnceLock<FaceLattice>,
}

impl Clone for VPolytope {
    fn clone(&self) -> Self {
        Self {
            ambient_dim: self.ambient_dim,
            vertices: self.vertices.clone(),
            scaled: self.scaled.clone(),
            scale: self.scale.clone(),
            facets: self.facets.clone(),
            facet_masks: self.facet_masks.clone(),
            vertex_facet_masks: self.vertex_facet_masks.clone(),
            lattice: OnceLock::new(),
        }
    }
}

impl PartialEq for VPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for VPolytope {}

impl VPolytope {
    /// Build a polytope from its claimed vertex list.
    ///
    /// Validates everything the rest of the kernel relies on: consistent
    /// dimensions, at least `d + 1` points spanning the full space, at most
    /// 64 points (the face machinery packs vertex sets into `u64` masks),
    /// and — via the facet scan — that every input point really is a vertex.
    pub fn new(ambient_dim: usize, vertices: Vec<Point>) -> Result<Self, KernelError> {
        if ambient_dim == 0 {
            return Err(KernelError::ZeroDimension);
        }
        if vertices.is_empty() {
            return Err(KernelError::EmptyPointSet);
        }
        for p in &vertices {
            if p.dim() != ambient_dim {
                return Err(KernelError::DimensionMismatch {
                    expected: ambient_dim,
                    got: p.dim(),
                });
            }
        }
        if vertices.len() < ambient_dim + 1 {
            return Err(KernelError::TooFewVertices {
                dim: ambient_dim,
                got: vertices.len(),
            });
        }
        if vertices.len() > 64 {
            return Err(KernelError::TooManyVertices {
                got: vertices.len(),
            });
        }

        let (scale, scaled) = scale_to_integers(&vertices);

        let rank = affine_rank_scaled(&scaled, ambient_dim);
        if rank != ambient_dim {
            return Err(KernelError::NotFullDimensional {
                rank,
                dim: ambient_dim,
            });
        }

        let (facets, facet_masks) = enumerate_facets(ambient_dim, &scaled, &scale);
        if facets.len() > 64 {
            return Err(KernelError::TooManyFacets { got: facets.len() });
        }

        let n = vertices.len();
        let mut vertex_facet_masks = vec![0u64; n];
        for (j, fm) in facet_masks.iter().enumerate() {
            for i in 0..n {
                if fm & (1 << i) != 0 {
                    vertex_facet_masks[i] |= 1 << j;
                }
            }
        }

        // Irredundancy: a genuine vertex is cut out by its own facets — the
        // set of points lying on every facet through it is just itself. A
        // point interior to the polytope lies on no facet; a point interior
        // to some face shares all its facets with that face's vertices.
        let full: u64 = mask_full(n);
        for i in 0..n {
            let mut closure = full;
            let mut on_any = false;
            for (j, fm) in facet_masks.iter().enumerate() {
                if vertex_facet_masks[i] & (1 << j) != 0 {
                    closure &= fm;
                    on_any = true;
                }
            }
            if !on_any || closure != (1 << i) {
                return Err(KernelError::RedundantPoint { index: i });
            }
        }

        Ok(Self {
            ambient_dim,
            vertices,
            scaled,
            scale,
            facets,
            facet_masks,
            vertex_facet_masks,
            lattice: OnceLock::new(),
        })
    }

    /// Convenience constructor for small integer coordinates.
    pub fn from_integers(ambient_dim: usize, rows: &[Vec<i64>]) -> Result<Self, KernelError> {
        Self::new(
            ambient_dim,
            rows.iter().map(|r| Point::from_integers(r)).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// The facets, sorted by their vertex index sets. Computed once at
    /// construction by the subset scan.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn n_facets(&self) -> usize {
        self.facets.len()
    }

    /// The full proper-face lattice, built on first use and cached.
    pub fn face_lattice(&self) -> &FaceLattice {
        self.lattice.get_or_init(|| FaceLattice::build(self))
    }

    /// The arithmetic mean of the vertices — always an interior point.
    pub fn centroid(&self) -> Point {
        let n = BigInt::from(self.vertices.len() as i64);
        let mut acc = vec![BigRational::zero(); self.ambient_dim];
        for p in &self.vertices {
            for (a, c) in acc.iter_mut().zip(p.coords()) {
                *a += c;
            }
        }
        let n = BigRational::from(n);
        Point::new(acc.into_iter().map(|a| a / &n).collect())
    }

    pub(crate) fn check_vertex_index(&self, v: usize) -> Result<(), KernelError> {
        if v >= self.vertices.len() {
            return Err(KernelError::VertexIndexOutOfRange {
                index: v,
                n_vertices: self.vertices.len(),
            });
        }
        Ok(())
    }

    /// Affine rank of the vertex subset given by a mask, using the
    /// pre-scaled integer coordinates.
    pub(crate) fn rank_of_subset(&self, mask: u64) -> usize {
        let members: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| mask & (1 << i) != 0)
            .collect();
        if members.is_empty() {
            return 0;
        }
        let base = &self.scaled[members[0]];
        let rows: Vec<Vec<BigInt>> = members[1..]
            .iter()
            .map(|&i| {
                self.scaled[i]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        integer_rank(rows, self.ambient_dim)
    }
}

pub(crate) fn mask_full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn scale_to_integers(vertices: &[Point]) -> (BigInt, Vec<Vec<BigInt>>) {
    let mut scale = BigInt::one();
    for p in vertices {
        for c in p.coords() {
            scale = scale.lcm(c.denom());
        }
    }
    let scaled = vertices
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|c| c.numer() * (&scale / c.denom()))
                .collect()
        })
        .collect();
    (scale, scaled)
}

fn affine_rank_scaled(scaled: &[Vec<BigInt>], cols: usize) -> usize {
    if scaled.is_empty() {
        return 0;
    }
    let base = &scaled[0];
    let rows: Vec<Vec<BigInt>> = scaled[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    integer_rank(rows, cols)
}

/// Affine rank of a point set: the dimension of its affine hull, so a single
/// point has rank 0 and a full-dimensional set in `R^d` has rank `d`.
pub fn affine_rank(points: &[Point]) -> Result<usize, KernelError> {
    if points.is_empty() {
        return Err(KernelError::EmptyPointSet);
    }
    let dim = points[0].dim();
    for p in points {
        if p.dim() != dim {
            return Err(KernelError::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
    }
    let (_, scaled) = scale_to_integers(points);
    Ok(affine_rank_scaled(&scaled, dim))
}

/// Brute-force facet enumeration over every `d`-element vertex subset.
///
/// Each subset of affine rank `d-1` spans a candidate hyperplane; the
/// candidate survives when every vertex lies weakly on one side. Candidates
/// are deduplicated by sign-normalized coefficient vectors, and subsets lying
/// inside an already-found facet are skipped without elimination (they can
/// only re-derive that facet or be degenerate). Facets come back sorted by
/// vertex set, each hyperplane oriented so the polytope satisfies
/// `normal · x <= offset`.
fn enumerate_facets(
    dim: usize,
    scaled: &[Vec<BigInt>],
    scale: &BigInt,
) -> (Vec<Facet>, Vec<u64>) {
    let n = scaled.len();
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut found: Vec<(Hyperplane, u64)> = Vec::new();
    let mut found_masks: Vec<u64> = Vec::new();

    for subset in (0..n).combinations(dim) {
        let mut submask = 0u64;
        for &i in &subset {
            submask |= 1 << i;
        }
        if found_masks.iter().any(|fm| submask & !fm == 0) {
            continue;
        }

        let base = &scaled[subset[0]];
        let rows: Vec<Vec<BigInt>> = subset[1..]
            .iter()
            .map(|&i| scaled[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let Some(normal) = null_space_vector(rows, dim) else {
            continue; // subset has affine rank below d-1
        };
        let offset = dot(&normal, base);

        let mut key = normal.clone();
        key.push(offset.clone());
        sign_normalize(&mut key);
        if !seen.insert(key) {
            continue;
        }

        let mut mask = 0u64;
        let mut pos = false;
        let mut neg = false;
        for (i, v) in scaled.iter().enumerate() {
            let t = dot(&normal, v) - &offset;
            if t.is_zero() {
                mask |= 1 << i;
            } else if t.is_positive() {
                pos = true;
            } else {
                neg = true;
            }
            if pos && neg {
                break;
            }
        }
        if pos && neg {
            continue;
        }

        let (mut normal, mut offset) = (normal, offset);
        if pos {
            for x in normal.iter_mut() {
                *x = -&*x;
            }
            offset = -offset;
        }
        // Translate from scaled to original coordinates: the condition
        // n · (scale · x) <= b is (scale · n) · x <= b.
        for x in normal.iter_mut() {
            *x *= scale;
        }
        found.push((Hyperplane::reduced(normal, offset), mask));
        found_masks.push(mask);
    }

    let mut facets: Vec<(Facet, u64)> = found
        .into_iter()
        .map(|(hyperplane, mask)| {
            let vertex_set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            (
                Facet {
                    hyperplane,
                    vertex_set,
                },
                mask,
            )
        })
        .collect();
    facets.sort_by(|a, b| a.0.vertex_set.cmp(&b.0.vertex_set));
    let masks = facets.iter().map(|(_, m)| *m).collect();
    (facets.into_iter().map(|(f, _)| f).collect(), masks)
}
