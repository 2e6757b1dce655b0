//! Face lattices and vertex–facet incidence structures.
//!
//! Faces are represented as `u64` bit masks over vertex indices. The lattice
//! is generated by closure: the closure of a vertex set is the set of
//! vertices lying on every facet that contains it, and every proper face is
//! the closure of its vertex set. A breadth-first sweep that adds one vertex
//! at a time to known faces therefore reaches every face — the face lattice
//! of a polytope is atomistic, so each face is a join of vertices.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::combinatorics::FaceCountVector;

use super::polytope::{mask_full, VPolytope};

/// All proper faces of a polytope, graded by dimension.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    dim: usize,
    n_vertices: usize,
    /// `grades[g]` holds the vertex masks of the `g`-dimensional faces,
    /// sorted ascending. `grades[0]` are the vertices, `grades[dim - 1]`
    /// the facets.
    grades: Vec<Vec<u64>>,
    grade_of: HashMap<u64, usize>,
    f_vector: FaceCountVector,
}

impl FaceLattice {
    /// Enumerate every proper face of `p` by closure search.
    pub(crate) fn build(p: &VPolytope) -> Self {
        let n = p.n_vertices();
        let dim = p.ambient_dim();
        let full = mask_full(n);

        let mut seen: HashSet<u64> = HashSet::new();
        let mut queue: VecDeque<u64> = VecDeque::new();
        for i in 0..n {
            let singleton = 1u64 << i;
            seen.insert(singleton);
            queue.push_back(singleton);
        }

        while let Some(face) = queue.pop_front() {
            for v in 0..n {
                if face & (1 << v) != 0 {
                    continue;
                }
                let grown = face | (1 << v);
                // Facets containing the grown set, as a facet-index mask.
                let mut facet_set = u64::MAX;
                for i in 0..n {
                    if grown & (1 << i) != 0 {
                        facet_set &= p.vertex_facet_masks[i];
                    }
                }
                if facet_set == 0 {
                    continue; // no facet contains it: the join is the whole polytope
                }
                let mut closure = full;
                for (j, fm) in p.facet_masks.iter().enumerate() {
                    if facet_set & (1 << j) != 0 {
                        closure &= fm;
                    }
                }
                if seen.insert(closure) {
                    queue.push_back(closure);
                }
            }
        }

        let mut grades: Vec<Vec<u64>> = vec![Vec::new(); dim];
        for &mask in &seen {
            let g = p.rank_of_subset(mask);
            assert!(
                g < dim,
                "a proper face cannot have full affine rank (mask {mask:#b})"
            );
            grades[g].push(mask);
        }
        for g in &mut grades {
            g.sort_unstable();
        }

        assert_eq!(
            grades[0].len(),
            n,
            "grade 0 of the closure lattice must be exactly the vertices"
        );
        let facet_masks_sorted: Vec<u64> = {
            let mut m = p.facet_masks.clone();
            m.sort_unstable();
            m
        };
        assert_eq!(
            grades[dim - 1],
            facet_masks_sorted,
            "top grade of the closure lattice must be exactly the facets"
        );

        let counts: Vec<i64> = grades.iter().map(|g| g.len() as i64).collect();
        let f_vector = FaceCountVector::realized_from(dim, &counts)
            .expect("closure lattice must yield a valid alternating-sum face vector");

        let grade_of = grades
            .iter()
            .enumerate()
            .flat_map(|(g, masks)| masks.iter().map(move |&m| (m, g)))
            .collect();

        Self {
            dim,
            n_vertices: n,
            grades,
            grade_of,
            f_vector,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Vertex masks of the faces of dimension `grade`, sorted ascending.
    pub fn faces(&self, grade: usize) -> &[u64] {
        &self.grades[grade]
    }

    /// The dimension of the face with this exact vertex mask, if it is one.
    pub fn grade_of(&self, mask: u64) -> Option<usize> {
        self.grade_of.get(&mask).copied()
    }

    pub fn f_vector(&self) -> &FaceCountVector {
        &self.f_vector
    }

    /// Every length-two interval of the lattice (with the empty face and the
    /// whole polytope adjoined) contains exactly two intermediate elements.
    pub fn diamond_property_holds(&self) -> bool {
        if self.dim == 1 {
            // Empty face up to the whole segment: its two vertices.
            return self.grades[0].len() == 2;
        }
        // Empty face up to a 1-dimensional face: its two vertices.
        for &e in &self.grades[1] {
            if e.count_ones() != 2 {
                return false;
            }
        }
        // A (dim-2)-face up to the whole polytope: the two facets above it.
        for &r in &self.grades[self.dim - 2] {
            let above = self.grades[self.dim - 1]
                .iter()
                .filter(|&&f| r & f == r)
                .count();
            if above != 2 {
                return false;
            }
        }
        // Proper intervals of length two.
        for g in 0..self.dim.saturating_sub(2) {
            for &low in &self.grades[g] {
                for &high in &self.grades[g + 2] {
                    if low & high != low {
                        continue;
                    }
                    let mid = self.grades[g + 1]
                        .iter()
                        .filter(|&&m| low & m == low && m & high == m)
                        .count();
                    if mid != 2 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The vertex–facet incidence matrix of a polytope, one `u64` row per facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    n_vertices: usize,
    rows: Vec<u64>,
}

/// A canonical relabeling-invariant form of an incidence structure: two
/// polytopes are combinatorially equivalent exactly when their canonical
/// forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalIncidence {
    pub n_vertices: usize,
    pub n_facets: usize,
    /// Facet rows as `'0'`/`'1'` strings under the canonical vertex order,
    /// sorted lexicographically.
    pub rows: Vec<String>,
}

impl IncidenceStructure {
    pub fn from_polytope(p: &VPolytope) -> Self {
        Self {
            n_vertices: p.n_vertices(),
            rows: p.facet_masks.clone(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_facets(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Facet `j` as a `'0'`/`'1'` string in input vertex order.
    pub fn row_string(&self, j: usize) -> String {
        (0..self.n_vertices)
            .map(|i| if self.rows[j] & (1 << i) != 0 { '1' } else { '0' })
            .collect()
    }

    /// Canonicalize by individualization–refinement: refine a vertex
    /// coloring against facet colors until stable, branch on each member of
    /// the first non-singleton class, and keep the lexicographically
    /// smallest emitted matrix over all discrete leaves. The result does not
    /// depend on the input labeling of vertices or facets.
    pub fn canonical_form(&self) -> CanonicalIncidence {
        let n = self.n_vertices;
        let mut best: Option<Vec<String>> = None;
        let mut colors = vec![0u32; n];
        self.refine(&mut colors);
        self.search(&mut colors, &mut best);
        CanonicalIncidence {
            n_vertices: n,
            n_facets: self.rows.len(),
            rows: best.unwrap_or_default(),
        }
    }

    fn refine(&self, colors: &mut [u32]) {
        let n = self.n_vertices;
        loop {
            let classes = count_classes(colors);
            // Facet signatures: the multiset of colors of incident vertices.
            let fkeys: Vec<Vec<u32>> = self
                .rows
                .iter()
                .map(|&row| {
                    let mut k: Vec<u32> = (0..n)
                        .filter(|&i| row & (1 << i) != 0)
                        .map(|i| colors[i])
                        .collect();
                    k.sort_unstable();
                    k
                })
                .collect();
            let fcolors = renumber(&fkeys);
            // Vertex signatures: old color plus the multiset of colors of
            // incident facets.
            let vkeys: Vec<(u32, Vec<u32>)> = (0..n)
                .map(|i| {
                    let mut k: Vec<u32> = self
                        .rows
                        .iter()
                        .enumerate()
                        .filter(|(_, &row)| row & (1 << i) != 0)
                        .map(|(j, _)| fcolors[j])
                        .collect();
                    k.sort_unstable();
                    (colors[i], k)
                })
                .collect();
            let new_colors = renumber(&vkeys);
            let new_classes = count_classes(&new_colors);
            colors.copy_from_slice(&new_colors);
            if new_classes == classes {
                return;
            }
        }
    }

    fn search(&self, colors: &mut Vec<u32>, best: &mut Option<Vec<String>>) {
        let n = self.n_vertices;
        // First non-singleton color class, by color value.
        let mut target: Option<u32> = None;
        for &c in colors.iter() {
            let size = colors.iter().filter(|&&x| x == c).count();
            if size > 1 && target.is_none_or(|t| c < t) {
                target = Some(c);
            }
        }
        match target {
            None => {
                // Discrete: colors define a total vertex order.
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by_key(|&i| colors[i]);
                let mut pos = vec![0usize; n];
                for (p, &i) in order.iter().enumerate() {
                    pos[i] = p;
                }
                let mut rows: Vec<String> = self
                    .rows
                    .iter()
                    .map(|&row| {
                        let mut chars = vec!['0'; n];
                        for i in 0..n {
                            if row & (1 << i) != 0 {
                                chars[pos[i]] = '1';
                            }
                        }
                        chars.into_iter().collect()
                    })
                    .collect();
                rows.sort_unstable();
                if best.as_ref().is_none_or(|b| rows < *b) {
                    *best = Some(rows);
                }
            }
            Some(c) => {
                let members: Vec<usize> =
                    (0..n).filter(|&i| colors[i] == c).collect();
                for v in members {
                    // Individualize v: split it off so it sorts just before
                    // its old classmates, then refine and recurse.
                    let mut branch: Vec<u32> =
                        colors.iter().map(|&x| x * 2 + 1).collect();
                    branch[v] -= 1;
                    self.refine(&mut branch);
                    self.search(&mut branch, best);
                }
            }
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c: Vec<u32> = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Replace each key by the rank of its value among the sorted distinct keys,
/// so equal keys get equal small color numbers in key order.
fn renumber<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present") as u32)
        .collect()
}
