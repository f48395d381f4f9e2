//! Reduced simplicial homology via exact boundary ranks.
//!
//! Everything runs over a chosen coefficient field: the rationals or a
//! prime field GF(p) with p < 2^31. The augmented chain complex carries
//! the empty face in degree -1, so the irrelevant complex has reduced
//! homology of dimension 1 there and the void complex has none at all.

use std::fmt;
use std::str::FromStr;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Family;
use crate::linalg;
use crate::set::VertexSet;

/// Nonzero entries allowed in one boundary matrix before the rank
/// computation refuses to start.
pub const MAX_BOUNDARY_NNZ: u64 = 1_000_000;

/// Coefficient field for homology and Betti numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidArgument(format!(
                "prime modulus {p} does not fit below 2^31"
            )));
        }
        if !linalg::is_prime_u64(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    /// The three fields the robustness comparisons sweep.
    pub fn standard_sweep() -> [FieldSpec; 3] {
        [FieldSpec::Rationals, FieldSpec::Prime(2), FieldSpec::Prime(3)]
    }

    /// Stable token used on the command line and in config echoes.
    pub fn flag_value(&self) -> String {
        match self {
            FieldSpec::Rationals => "rational".into(),
            FieldSpec::Prime(p) => p.to_string(),
        }
    }

    fn rank(&self, ncols: usize, rows: &[linalg::Row<i64>]) -> usize {
        match self {
            FieldSpec::Rationals => linalg::rank_rational(ncols, rows),
            FieldSpec::Prime(p) => linalg::rank_mod_p(ncols, rows, *p as u64),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" | "QQ" | "q" => Ok(FieldSpec::Rationals),
            other => {
                let p: u64 = other.parse().map_err(|_| {
                    Error::InvalidArgument(format!(
                        "field must be \"rational\" or a prime below 2^31, got \"{other}\""
                    ))
                })?;
                FieldSpec::prime(p)
            }
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.flag_value())
    }
}

/// Dimensions of the reduced homology groups, indexed from degree -1.
/// Serializes as the bare array of dimensions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyProfile {
    dims: Vec<u64>,
    void_input: bool,
}

impl HomologyProfile {
    pub(crate) fn from_dims(mut dims: Vec<u64>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        HomologyProfile { dims, void_input: false }
    }

    pub(crate) fn void() -> Self {
        HomologyProfile { dims: Vec::new(), void_input: true }
    }

    /// dim of reduced homology in degree i, where i starts at -1.
    /// Degrees outside the stored range are zero.
    pub fn dim(&self, i: i64) -> u64 {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// The stored dimensions, degree -1 first.
    pub fn dims_from_minus_one(&self) -> &[u64] {
        &self.dims
    }

    /// Largest degree with nonzero homology.
    pub fn top_nonzero_degree(&self) -> Option<i64> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(k, _)| k as i64 - 1)
            .next_back()
    }

    /// True when the profile was produced from the void complex; all its
    /// dimensions are zero by convention then.
    pub fn void_input(&self) -> bool {
        self.void_input
    }

    /// Alternating sum of the dimensions with sign (-1)^degree.
    pub fn reduced_euler(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| {
                let sign = if (k as i64 - 1).rem_euclid(2) == 0 { 1 } else { -1 };
                sign * d as i64
            })
            .sum()
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.dims.len()))?;
        for d in &self.dims {
            seq.serialize_element(d)?;
        }
        seq.end()
    }
}

/// Sparse boundary map from dimension-i faces to dimension-(i-1) faces,
/// with faces listed canonically and coefficients already reduced into
/// the requested field.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryMatrix {
    pub rows: Vec<VertexSet>,
    pub cols: Vec<VertexSet>,
    /// (row index, column index, coefficient), sorted by column then row.
    pub entries: Vec<(usize, usize, i64)>,
}

impl BoundaryMatrix {
    /// Dense product of two boundary matrices; the composition dd in the
    /// tests must vanish identically.
    pub fn compose(&self, inner: &BoundaryMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.cols.len(), inner.rows.len(), "boundary dimensions must chain");
        let mut out = vec![vec![0i64; inner.cols.len()]; self.rows.len()];
        for &(r, k, a) in &self.entries {
            for &(k2, c, b) in &inner.entries {
                if k2 == k {
                    out[r][c] += a * b;
                }
            }
        }
        out
    }
}

/// The boundary map in simplicial dimension i (so from faces of size i+1
/// to faces of size i), -1 <= i <= dim. The sign of a removed vertex is
/// (-1)^position within the sorted column face.
pub fn boundary_matrix(c: &SimplicialComplex, i: i64, field: FieldSpec) -> Result<BoundaryMatrix> {
    let Some(dim) = c.dimension() else {
        return Err(Error::InvalidArgument(
            "the void complex has no boundary matrices".into(),
        ));
    };
    if i < -1 || i > dim {
        return Err(Error::InvalidArgument(format!(
            "boundary dimension {i} outside -1..={dim}"
        )));
    }
    let cols = c.faces_of_size((i + 1) as u32)?;
    let rows = if i == -1 { Vec::new() } else { c.faces_of_size(i as u32)? };
    let minus_one = match field {
        FieldSpec::Rationals => -1i64,
        FieldSpec::Prime(p) => p as i64 - 1,
    };
    let mut entries = Vec::new();
    for (ci, col) in cols.iter().enumerate() {
        for (pos, v) in col.iter().enumerate() {
            let sub = col.without(v);
            let ri = rows.binary_search(&sub).expect("subface of a face is a face");
            let coeff = if pos % 2 == 0 { 1 } else { minus_one };
            entries.push((ri, ci, coeff));
        }
    }
    entries.sort_unstable_by_key(|&(r, c2, _)| (c2, r));
    Ok(BoundaryMatrix { rows, cols, entries })
}

/// Homology dimensions from levels of face masks: levels[s] holds the
/// size-s faces, each level sorted ascending by mask. Returns dims
/// indexed from degree -1. Shared by full complexes and the
/// restriction sweeps.
pub(crate) fn homology_dims_of_levels(
    levels: &[Vec<u64>],
    field: FieldSpec,
) -> Result<Vec<u64>> {
    if levels.is_empty() || levels[0].is_empty() {
        return Ok(Vec::new());
    }
    let top = levels.len() - 1;
    // ranks[t] = rank of the map from size-t faces to size-(t-1) faces
    let mut ranks = vec![0usize; top + 2];
    for t in 1..=top {
        let nnz = (t as u64) * levels[t].len() as u64;
        if nnz > MAX_BOUNDARY_NNZ {
            return Err(Error::resource("boundary matrix nonzeros", nnz, MAX_BOUNDARY_NNZ));
        }
        let below = &levels[t - 1];
        let rows: Vec<linalg::Row<i64>> = levels[t]
            .iter()
            .map(|&mask| {
                let f = VertexSet::from_bits(mask);
                let mut row: linalg::Row<i64> = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sub = f.without(v).bits();
                        let idx = below.binary_search(&sub).expect("closed under subsets");
                        (idx as u32, if pos % 2 == 0 { 1i64 } else { -1i64 })
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        ranks[t] = field.rank(below.len(), &rows);
    }
    let mut dims = Vec::with_capacity(top + 1);
    for t in 0..=top {
        let f = levels[t].len();
        dims.push((f - ranks[t] - ranks[t + 1]) as u64);
    }
    Ok(dims)
}

/// Reduced homology of a complex over the given field. The void complex
/// yields the flagged all-zero profile.
pub fn reduced_homology(c: &SimplicialComplex, field: FieldSpec) -> Result<HomologyProfile> {
    if c.is_void() {
        return Ok(HomologyProfile::void());
    }
    let levels = c.faces_by_size()?;
    Ok(HomologyProfile::from_dims(homology_dims_of_levels(&levels, field)?))
}

/// Checks the degree shift between the family complex on n vertices and
/// the one on n-3: dim of reduced homology in degree i at n must equal
/// degree i-1 at n-3, for every i >= 0.
pub fn homology_shift_check(family: Family, n: u32, field: FieldSpec) -> Result<bool> {
    let min = family.min_n() + 3;
    if n < min {
        return Err(Error::InvalidArgument(format!(
            "shift comparison for {family} needs n >= {min}, got {n}"
        )));
    }
    let big = reduced_homology(&family.complex(n)?, field)?;
    let small = reduced_homology(&family.complex(n - 3)?, field)?;
    let top = big
        .dims_from_minus_one()
        .len()
        .max(small.dims_from_minus_one().len() + 1) as i64;
    Ok((0..top).all(|i| big.dim(i) == small.dim(i - 1)))
}
