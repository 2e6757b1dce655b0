//! Named polytope families, built exactly and bound to their predicted face
//! counts.
//!
//! Each [`FamilySpec`] names a construction: simplices, simplicial prisms,
//! pyramid towers over prisms (triplices), the truncation families `J`, `A`,
//! `C`, the hull family `Sigma`, pyramid towers over sums and products of two
//! simplices, and repeated vertex truncations of a simplex. [`FamilySpec::build`]
//! produces a certified [`VPolytope`]; [`FamilySpec::expected_fvector`] gives
//! the closed-form face vector for the families that have one, so the two can
//! be compared entry by entry with no tolerance.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::combinatorics::{
    binomial, eta, pyr_prod_count, pyr_sum_count, theta, FaceCountVector, FormulaError,
};
use crate::kernel::{
    is_simple_vertex, k_fold_pyramid, product, truncate_face, vertex_degree, KernelError,
    VPolytope,
};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("cannot parse family spec {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid parameters for {spec}: {reason}")]
    InvalidParameters { spec: String, reason: String },

    #[error("{spec} has no {target} to truncate")]
    TargetAbsent { spec: String, target: String },

    #[error(transparent)]
    Kernel(#[from] KernelError),

    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// A named member of one of the supported polytope families.
///
/// The string grammar is `name:key=value,key=value` with the keys shown by
/// [`fmt::Display`], e.g. `J:s=3,d=6`, `tmprod:d=5,a=5,m=2`, `sigma:d=4`,
/// `trunc:d=4,n=2`. Names are case-insensitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// The `d`-simplex `T(d)`.
    Simplex { d: i64 },
    /// The `s`-dimensional simplicial prism `T(s-1) x T(1)`, with `2s`
    /// vertices. `s = 1` degenerates to the segment.
    SimplicialPrism { s: i64 },
    /// The `(d-s)`-fold pyramid over the `s`-dimensional simplicial prism:
    /// a `d`-polytope with `d + s` vertices. `s = 1` degenerates to the
    /// simplex `T(d)`.
    Triplex { s: i64, d: i64 },
    /// The triplex with its first simple vertex truncated: `2d + s - 1`
    /// vertices and `d + 3` facets.
    J { s: i64, d: i64 },
    /// `Triplex(2, d-2)` with its first vertex of degree `d + 1` truncated:
    /// `2d + 2` vertices.
    A { d: i64 },
    /// `Triplex(2, d-2)` with its first edge joining two simple vertices
    /// truncated: `3d - 2` vertices.
    C { d: i64 },
    /// The hull of `0, e1, e2, e1+e2` together with `e1+ek`, `e2+ek` and
    /// `e1+e2+2ek` for `3 <= k <= d`: a `d`-polytope with `3d - 2` vertices.
    Sigma { d: i64 },
    /// The `(d-a)`-fold pyramid over the free sum `T(m) # T(a-m)`.
    TmSum { d: i64, a: i64, m: i64 },
    /// The `(d-a)`-fold pyramid over the product `T(m) x T(a-m)`.
    TmProd { d: i64, a: i64, m: i64 },
    /// `T(d)` with its first simple vertex truncated `n` times over:
    /// `d + 1 + n(d-1)` vertices and `d + 1 + n` facets.
    TruncationSequence { d: i64, n: i64 },
}

impl FamilySpec {
    /// Check the parameter ranges under which the family is defined.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let fail = |reason: String| {
            Err(FamilyError::InvalidParameters {
                spec: self.to_string(),
                reason,
            })
        };
        match *self {
            FamilySpec::Simplex { d } => {
                if d < 1 {
                    return fail(format!("need d >= 1, got d={d}"));
                }
            }
            FamilySpec::SimplicialPrism { s } => {
                if s < 1 {
                    return fail(format!("need s >= 1, got s={s}"));
                }
            }
            FamilySpec::Triplex { s, d } => {
                if !(1 <= s && s <= d) {
                    return fail(format!("need 1 <= s <= d, got s={s}, d={d}"));
                }
            }
            FamilySpec::J { s, d } => {
                if !(2 <= s && s <= d) {
                    return fail(format!("need 2 <= s <= d, got s={s}, d={d}"));
                }
            }
            FamilySpec::A { d } | FamilySpec::C { d } => {
                if d < 2 {
                    return fail(format!("need d >= 2, got d={d}"));
                }
            }
            FamilySpec::Sigma { d } => {
                if d < 3 {
                    return fail(format!("need d >= 3, got d={d}"));
                }
            }
            FamilySpec::TmSum { d, a, m } | FamilySpec::TmProd { d, a, m } => {
                if !(2 <= a && a <= d) {
                    return fail(format!("need 2 <= a <= d, got a={a}, d={d}"));
                }
                if !(1 <= m && m <= a / 2) {
                    return fail(format!("need 1 <= m <= floor(a/2), got m={m}, a={a}"));
                }
            }
            FamilySpec::TruncationSequence { d, n } => {
                if d < 2 {
                    return fail(format!("need d >= 2, got d={d}"));
                }
                if n < 0 {
                    return fail(format!("need n >= 0, got n={n}"));
                }
            }
        }
        Ok(())
    }

    /// The dimension of the polytope this family member describes.
    pub fn dim(&self) -> i64 {
        match *self {
            FamilySpec::Simplex { d }
            | FamilySpec::Triplex { d, .. }
            | FamilySpec::J { d, .. }
            | FamilySpec::A { d }
            | FamilySpec::C { d }
            | FamilySpec::Sigma { d }
            | FamilySpec::TmSum { d, .. }
            | FamilySpec::TmProd { d, .. }
            | FamilySpec::TruncationSequence { d, .. } => d,
            FamilySpec::SimplicialPrism { s } => s,
        }
    }

    /// The vertex count the construction is guaranteed to produce.
    pub fn vertex_count_expected(&self) -> i64 {
        match *self {
            FamilySpec::Simplex { d } => d + 1,
            FamilySpec::SimplicialPrism { s } => 2 * s,
            FamilySpec::Triplex { s, d } => d + s,
            FamilySpec::J { s, d } => 2 * d + s - 1,
            FamilySpec::A { d } => 2 * d + 2,
            FamilySpec::C { d } | FamilySpec::Sigma { d } => 3 * d - 2,
            FamilySpec::TmSum { d, .. } => d + 2,
            FamilySpec::TmProd { d, a, m } => d + 1 + m * (a - m),
            FamilySpec::TruncationSequence { d, n } => d + 1 + n * (d - 1),
        }
    }

    /// The facet count, where the construction pins one down. `Sigma` and
    /// `TmSum` are omitted: no general facet count is asserted for them.
    pub fn facet_count_expected(&self) -> Option<i64> {
        match *self {
            FamilySpec::Simplex { d } => Some(d + 1),
            FamilySpec::SimplicialPrism { s } => Some(if s == 1 { 2 } else { s + 2 }),
            FamilySpec::Triplex { s, d } => Some(if s == 1 { d + 1 } else { d + 2 }),
            FamilySpec::J { d, .. } | FamilySpec::A { d } | FamilySpec::C { d } => Some(d + 3),
            FamilySpec::Sigma { .. } | FamilySpec::TmSum { .. } => None,
            FamilySpec::TmProd { d, .. } => Some(d + 2),
            FamilySpec::TruncationSequence { d, n } => Some(d + 1 + n),
        }
    }

    /// Build an exact realization of this family member.
    pub fn build(&self) -> Result<VPolytope, FamilyError> {
        self.validate()?;
        let p = match *self {
            FamilySpec::Simplex { d } => simplex(d as usize)?,
            FamilySpec::SimplicialPrism { s } => prism(s as usize)?,
            FamilySpec::Triplex { s, d } => triplex(s as usize, d as usize)?,
            FamilySpec::J { s, d } => {
                let base = triplex(s as usize, d as usize)?;
                let v = first_simple_vertex(&base)?.ok_or_else(|| {
                    FamilyError::TargetAbsent {
                        spec: self.to_string(),
                        target: "simple vertex".into(),
                    }
                })?;
                truncate_face(&base, &[v])?
            }
            FamilySpec::A { d } => {
                let base = triplex(2, d as usize)?;
                let v = first_vertex_of_degree(&base, d as usize + 1)?.ok_or_else(|| {
                    FamilyError::TargetAbsent {
                        spec: self.to_string(),
                        target: format!("vertex of degree {}", d + 1),
                    }
                })?;
                truncate_face(&base, &[v])?
            }
            FamilySpec::C { d } => {
                let base = triplex(2, d as usize)?;
                let (u, w) = first_simple_edge(&base)?.ok_or_else(|| {
                    FamilyError::TargetAbsent {
                        spec: self.to_string(),
                        target: "edge with two simple vertices".into(),
                    }
                })?;
                truncate_face(&base, &[u, w])?
            }
            FamilySpec::Sigma { d } => sigma(d as usize)?,
            FamilySpec::TmSum { d, a, m } => {
                let base = crate::kernel::direct_sum(
                    &simplex(m as usize)?,
                    &simplex((a - m) as usize)?,
                )?;
                k_fold_pyramid(&base, (d - a) as usize)?
            }
            FamilySpec::TmProd { d, a, m } => {
                let base = product(&simplex(m as usize)?, &simplex((a - m) as usize)?)?;
                k_fold_pyramid(&base, (d - a) as usize)?
            }
            FamilySpec::TruncationSequence { d, n } => {
                let mut p = simplex(d as usize)?;
                for _ in 0..n {
                    let v = first_simple_vertex(&p)?.ok_or_else(|| {
                        FamilyError::TargetAbsent {
                            spec: self.to_string(),
                            target: "simple vertex".into(),
                        }
                    })?;
                    p = truncate_face(&p, &[v])?;
                }
                p
            }
        };
        Ok(p)
    }

    /// The closed-form face vector for the families that have one; `None`
    /// for `Sigma`, `C` and `TruncationSequence`, where only vertex and
    /// facet counts are available.
    ///
    /// The triplex entry for the facets is not covered by the vertex-range
    /// formula, so it is read off the built polytope's lattice instead.
    pub fn expected_fvector(&self) -> Result<Option<FaceCountVector>, FamilyError> {
        self.validate()?;
        let v = match *self {
            FamilySpec::Simplex { d } => Some(simplex_counts(d)?),
            FamilySpec::SimplicialPrism { s } => {
                if s == 1 {
                    Some(FaceCountVector::formula(1, vec![BigInt::from(2)])?)
                } else {
                    let counts = (0..s)
                        .map(|k| pyr_prod_count(k, s, 1, s))
                        .collect::<Result<Vec<_>, _>>()?;
                    Some(FaceCountVector::formula(s as usize, counts)?)
                }
            }
            FamilySpec::Triplex { s, d } => {
                if s == 1 {
                    Some(simplex_counts(d)?)
                } else {
                    let n = d + s;
                    let mut counts = vec![BigInt::from(n)];
                    for k in 1..=(d - 2) {
                        counts.push(theta(k, n, d)?);
                    }
                    let facets = self.build()?.n_facets();
                    counts.push(BigInt::from(facets as i64));
                    Some(FaceCountVector::formula(d as usize, counts)?)
                }
            }
            FamilySpec::J { s, d } => Some(eta_counts(2 * d + s - 1, d)?),
            FamilySpec::A { d } => Some(eta_counts(2 * d + 2, d)?),
            FamilySpec::TmSum { d, a, m } => {
                let counts = (0..d)
                    .map(|k| pyr_sum_count(k, a, m, d))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(FaceCountVector::formula(d as usize, counts)?)
            }
            FamilySpec::TmProd { d, a, m } => {
                let counts = (0..d)
                    .map(|k| pyr_prod_count(k, a, m, d))
                    .collect::<Result<Vec<_>, _>>()?;
                Some(FaceCountVector::formula(d as usize, counts)?)
            }
            FamilySpec::C { .. }
            | FamilySpec::Sigma { .. }
            | FamilySpec::TruncationSequence { .. } => None,
        };
        Ok(v)
    }
}

fn simplex_counts(d: i64) -> Result<FaceCountVector, FamilyError> {
    let counts = (0..d)
        .map(|k| binomial(d + 1, k + 1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FaceCountVector::formula(d as usize, counts)?)
}

fn eta_counts(n: i64, d: i64) -> Result<FaceCountVector, FamilyError> {
    let mut counts = vec![BigInt::from(n)];
    for k in 1..d {
        counts.push(eta(k, n, d)?);
    }
    Ok(FaceCountVector::formula(d as usize, counts)?)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Simplex { d } => write!(f, "simplex:d={d}"),
            FamilySpec::SimplicialPrism { s } => write!(f, "prism:s={s}"),
            FamilySpec::Triplex { s, d } => write!(f, "triplex:s={s},d={d}"),
            FamilySpec::J { s, d } => write!(f, "J:s={s},d={d}"),
            FamilySpec::A { d } => write!(f, "A:d={d}"),
            FamilySpec::C { d } => write!(f, "C:d={d}"),
            FamilySpec::Sigma { d } => write!(f, "sigma:d={d}"),
            FamilySpec::TmSum { d, a, m } => write!(f, "tmsum:d={d},a={a},m={m}"),
            FamilySpec::TmProd { d, a, m } => write!(f, "tmprod:d={d},a={a},m={m}"),
            FamilySpec::TruncationSequence { d, n } => write!(f, "trunc:d={d},n={n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: String| FamilyError::Parse {
            input: input.to_string(),
            reason,
        };
        let (name, rest) = match input.split_once(':') {
            Some((n, r)) => (n.trim().to_ascii_lowercase(), r.trim()),
            None => (input.trim().to_ascii_lowercase(), ""),
        };
        let mut params: BTreeMap<String, i64> = BTreeMap::new();
        if !rest.is_empty() {
            for piece in rest.split(',') {
                let (k, v) = piece
                    .split_once('=')
                    .ok_or_else(|| parse_err(format!("expected key=value, got {piece:?}")))?;
                let key = k.trim().to_ascii_lowercase();
                let value: i64 = v
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(format!("{:?} is not an integer", v.trim())))?;
                if params.insert(key.clone(), value).is_some() {
                    return Err(parse_err(format!("duplicate key {key:?}")));
                }
            }
        }
        let keys: Vec<&str> = params.keys().map(String::as_str).collect();
        let get = |expected: &[&str]| -> Result<Vec<i64>, FamilyError> {
            let mut sorted: Vec<&str> = expected.to_vec();
            sorted.sort_unstable();
            if keys != sorted {
                return Err(parse_err(format!(
                    "expected exactly the keys {expected:?}, got {keys:?}"
                )));
            }
            Ok(expected.iter().map(|k| params[*k]).collect())
        };
        let spec = match name.as_str() {
            "simplex" => {
                let p = get(&["d"])?;
                FamilySpec::Simplex { d: p[0] }
            }
            "prism" | "simplicialprism" => {
                let p = get(&["s"])?;
                FamilySpec::SimplicialPrism { s: p[0] }
            }
            "triplex" => {
                let p = get(&["s", "d"])?;
                FamilySpec::Triplex { s: p[0], d: p[1] }
            }
            "j" => {
                let p = get(&["s", "d"])?;
                FamilySpec::J { s: p[0], d: p[1] }
            }
            "a" => {
                let p = get(&["d"])?;
                FamilySpec::A { d: p[0] }
            }
            "c" => {
                let p = get(&["d"])?;
                FamilySpec::C { d: p[0] }
            }
            "sigma" => {
                let p = get(&["d"])?;
                FamilySpec::Sigma { d: p[0] }
            }
            "tmsum" => {
                let p = get(&["d", "a", "m"])?;
                FamilySpec::TmSum {
                    d: p[0],
                    a: p[1],
                    m: p[2],
                }
            }
            "tmprod" => {
                let p = get(&["d", "a", "m"])?;
                FamilySpec::TmProd {
                    d: p[0],
                    a: p[1],
                    m: p[2],
                }
            }
            "trunc" | "truncationsequence" => {
                let p = get(&["d", "n"])?;
                FamilySpec::TruncationSequence { d: p[0], n: p[1] }
            }
            other => {
                return Err(parse_err(format!("unknown family name {other:?}")));
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// One facet class of the pyramid-over-product family, as a description with
/// vertex count and multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetClass {
    pub description: String,
    pub vertex_count: i64,
    pub multiplicity: i64,
}

/// The facet census of `TmProd(d, a, m)`: the `d + 2` facets fall into three
/// classes by which factor or apex they omit. The census is verified against
/// the built polytope's actual facet sizes on every call.
pub fn facet_census_tm_prod(d: i64, a: i64, m: i64) -> Result<Vec<FacetClass>, FamilyError> {
    let spec = FamilySpec::TmProd { d, a, m };
    spec.validate()?;
    let f0 = spec.vertex_count_expected();
    let census = vec![
        FacetClass {
            description: format!(
                "{}-fold pyramid over T({}) x T({}), omitting a facet of the first factor",
                d - a,
                m - 1,
                a - m
            ),
            vertex_count: f0 - (a - m + 1),
            multiplicity: m + 1,
        },
        FacetClass {
            description: format!(
                "{}-fold pyramid over T({}) x T({}), omitting a facet of the second factor",
                d - a,
                m,
                a - m - 1
            ),
            vertex_count: f0 - (m + 1),
            multiplicity: a - m + 1,
        },
        FacetClass {
            description: "pyramid over the rest of the polytope, omitting one apex".to_string(),
            vertex_count: f0 - 1,
            multiplicity: d - a,
        },
    ];

    let total: i64 = census.iter().map(|c| c.multiplicity).sum();
    assert_eq!(total, d + 2, "the census must cover all d + 2 facets");

    let p = spec.build()?;
    let mut actual: Vec<i64> = p
        .facets()
        .iter()
        .map(|f| f.vertex_set.len() as i64)
        .collect();
    actual.sort_unstable();
    let mut predicted: Vec<i64> = census
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.vertex_count, c.multiplicity as usize))
        .collect();
    predicted.sort_unstable();
    assert_eq!(
        predicted, actual,
        "facet census of {spec} must match the scanned facet sizes"
    );
    Ok(census)
}

/// Every buildable spec of dimension at most `d_max`, with degenerate
/// corner cases excluded (`A` and `C` start at `d = 3`, truncation
/// sequences run `n` up to 3). Useful as a test corpus.
pub fn corpus(d_max: i64) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for d in 1..=d_max {
        out.push(FamilySpec::Simplex { d });
    }
    for s in 2..=d_max {
        out.push(FamilySpec::SimplicialPrism { s });
    }
    for d in 1..=d_max {
        for s in 1..=d {
            out.push(FamilySpec::Triplex { s, d });
        }
    }
    for d in 2..=d_max {
        for s in 2..=d {
            out.push(FamilySpec::J { s, d });
        }
    }
    for d in 3..=d_max {
        out.push(FamilySpec::A { d });
        out.push(FamilySpec::C { d });
        out.push(FamilySpec::Sigma { d });
    }
    for d in 2..=d_max {
        for a in 2..=d {
            for m in 1..=a / 2 {
                out.push(FamilySpec::TmSum { d, a, m });
                out.push(FamilySpec::TmProd { d, a, m });
            }
        }
    }
    for d in 2..=d_max {
        for n in 0..=3 {
            if (FamilySpec::TruncationSequence { d, n }).vertex_count_expected() <= 64 {
                out.push(FamilySpec::TruncationSequence { d, n });
            }
        }
    }
    out
}

fn simplex(d: usize) -> Result<VPolytope, KernelError> {
    let mut rows = vec![vec![0i64; d]];
    for i in 0..d {
        let mut e = vec![0i64; d];
        e[i] = 1;
        rows.push(e);
    }
    VPolytope::from_integers(d, &rows)
}

fn prism(s: usize) -> Result<VPolytope, KernelError> {
    if s == 1 {
        return VPolytope::from_integers(1, &[vec![0], vec![1]]);
    }
    product(&simplex(s - 1)?, &simplex(1)?)
}

/// The `(d-s)`-fold pyramid over the `s`-dimensional simplicial prism. Prism
/// vertices keep the low indices; apexes are appended in the order the
/// pyramids are taken.
fn triplex(s: usize, d: usize) -> Result<VPolytope, KernelError> {
    k_fold_pyramid(&prism(s)?, d - s)
}

fn sigma(d: usize) -> Result<VPolytope, KernelError> {
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(3 * d - 2);
    let unit = |i: usize| -> Vec<i64> {
        let mut e = vec![0i64; d];
        e[i] = 1;
        e
    };
    let zero = vec![0i64; d];
    let e1 = unit(0);
    let e2 = unit(1);
    let e12: Vec<i64> = e1.iter().zip(&e2).map(|(a, b)| a + b).collect();
    rows.push(zero);
    rows.push(e1.clone());
    rows.push(e2.clone());
    rows.push(e12.clone());
    for k in 2..d {
        let ek = unit(k);
        rows.push(e1.iter().zip(&ek).map(|(a, b)| a + b).collect());
        rows.push(e2.iter().zip(&ek).map(|(a, b)| a + b).collect());
        rows.push(e12.iter().zip(&ek).map(|(a, b)| a + 2 * b).collect());
    }
    VPolytope::from_integers(d, &rows)
}

fn first_simple_vertex(p: &VPolytope) -> Result<Option<usize>, KernelError> {
    for v in 0..p.n_vertices() {
        if is_simple_vertex(p, v)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

fn first_vertex_of_degree(p: &VPolytope, degree: usize) -> Result<Option<usize>, KernelError> {
    for v in 0..p.n_vertices() {
        if vertex_degree(p, v)? == degree {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// The first edge (in the lattice's sorted order) whose two endpoints are
/// both simple vertices.
fn first_simple_edge(p: &VPolytope) -> Result<Option<(usize, usize)>, KernelError> {
    if p.ambient_dim() < 2 {
        return Ok(None);
    }
    let edges: Vec<u64> = p.face_lattice().faces(1).to_vec();
    for e in edges {
        let u = e.trailing_zeros() as usize;
        let w = (63 - e.leading_zeros()) as usize;
        if is_simple_vertex(p, u)? && is_simple_vertex(p, w)? {
            return Ok(Some((u, w)));
        }
    }
    Ok(None)
}
