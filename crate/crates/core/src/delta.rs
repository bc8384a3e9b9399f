//! Ordered semi-simplicial (Delta) complexes.
//!
//! A complex stores, per dimension, the list of simplices and for each
//! simplex its ordered faces. Simplices carry an explicit vertex order and
//! are *not* determined by their vertex sets: distinct simplices with equal
//! vertex tuples are legal and are never merged. Quotients of free
//! simplicial actions stay inside this category, which is why the whole
//! pipeline is built on it.

use crate::caps::Caps;
use crate::snf::{
    rank, smith_diagonal, torsion_factors, AbelianGroupStructure, IntMatrix, SnfError,
};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DeltaError {
    #[error("face {face} of {dim}-simplex {simplex} out of range (lower dimension has {lower})")]
    FaceOutOfRange { dim: usize, simplex: usize, face: usize, lower: usize },
    #[error("{dim}-simplex {simplex} has {got} faces, expected {expected}")]
    WrongFaceCount { dim: usize, simplex: usize, got: usize, expected: usize },
    #[error("simplicial identity fails on {dim}-simplex {simplex} at (i,j)=({i},{j})")]
    SimplicialIdentity { dim: usize, simplex: usize, i: usize, j: usize },
    #[error("dimension {n} out of range for complex of dimension {dim}")]
    DimensionOutOfRange { n: usize, dim: usize },
    #[error("construction would exceed the simplex cap {cap} (needs {needed})")]
    SizeCapExceeded { needed: usize, cap: usize },
    #[error(transparent)]
    Snf(#[from] SnfError),
}

/// An ordered semi-simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaComplex {
    vertex_count: usize,
    /// `faces[d-1][s]` lists the `d+1` ordered faces of the `d`-simplex `s`,
    /// as indices into dimension `d-1`.
    faces: Vec<Vec<Vec<usize>>>,
}

impl DeltaComplex {
    /// Validates face ranges and the simplicial identities
    /// `d_i d_j = d_{j-1} d_i` for `i < j`.
    pub fn new(vertex_count: usize, faces: Vec<Vec<Vec<usize>>>) -> Result<Self, DeltaError> {
        let c = DeltaComplex { vertex_count, faces };
        for d in 1..c.faces.len() + 1 {
            let lower = c.count(d - 1);
            for s in 0..c.count(d) {
                let fl = c.face_list(d, s);
                if fl.len() != d + 1 {
                    return Err(DeltaError::WrongFaceCount {
                        dim: d,
                        simplex: s,
                        got: fl.len(),
                        expected: d + 1,
                    });
                }
                for &f in fl {
                    if f >= lower {
                        return Err(DeltaError::FaceOutOfRange {
                            dim: d,
                            simplex: s,
                            face: f,
                            lower,
                        });
                    }
                }
            }
        }
        for d in 2..c.faces.len() + 1 {
            for s in 0..c.count(d) {
                for j in 1..=d {
                    for i in 0..j {
                        let a = c.face(d - 1, c.face(d, s, j), i);
                        let b = c.face(d - 1, c.face(d, s, i), j - 1);
                        if a != b {
                            return Err(DeltaError::SimplicialIdentity { dim: d, simplex: s, i, j });
                        }
                    }
                }
            }
        }
        Ok(c)
    }

    /// A single point.
    pub fn point() -> Self {
        DeltaComplex { vertex_count: 1, faces: Vec::new() }
    }

    /// Top dimension carrying simplices.
    pub fn dim(&self) -> usize {
        let mut d = self.faces.len();
        while d > 0 && self.faces[d - 1].is_empty() {
            d -= 1;
        }
        d
    }

    pub fn count(&self, d: usize) -> usize {
        if d == 0 {
            self.vertex_count
        } else {
            self.faces.get(d - 1).map_or(0, |v| v.len())
        }
    }

    #[inline]
    pub fn face(&self, d: usize, s: usize, i: usize) -> usize {
        self.faces[d - 1][s][i]
    }

    pub fn face_list(&self, d: usize, s: usize) -> &[usize] {
        &self.faces[d - 1][s]
    }

    /// Ordered vertex tuple of a simplex, derived through the face maps.
    pub fn vertex_tuple(&self, d: usize, s: usize) -> Vec<usize> {
        if d == 0 {
            return vec![s];
        }
        let mut rest = self.vertex_tuple(d - 1, self.face(d, s, 0));
        let first = if d == 1 {
            self.face(d, s, 1)
        } else {
            self.vertex_tuple(d - 1, self.face(d, s, 1))[0]
        };
        let mut out = Vec::with_capacity(d + 1);
        out.push(first);
        out.append(&mut rest);
        out
    }

    /// Iterated face keeping exactly the vertex positions in `keep`
    /// (sorted ascending); returns (new dimension, simplex).
    pub fn iterated_face(&self, d: usize, s: usize, keep: &[usize]) -> (usize, usize) {
        debug_assert!(!keep.is_empty());
        let mut cur_d = d;
        let mut cur_s = s;
        for pos in (0..=d).rev() {
            if !keep.contains(&pos) {
                if cur_d == 0 {
                    unreachable!("keep must be nonempty");
                }
                cur_s = self.face(cur_d, cur_s, pos);
                cur_d -= 1;
            }
        }
        (cur_d, cur_s)
    }

    /// Tail and head of an edge: vertex 0 and vertex 1.
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        (self.face(1, e, 1), self.face(1, e, 0))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        if self.vertex_count == 0 {
            return Vec::new();
        }
        (0..=self.dim()).map(|d| self.count(d)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.dim())
            .map(|d| {
                let c = self.count(d) as i64;
                if d % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }

    pub fn total_simplices(&self) -> usize {
        (0..=self.dim()).map(|d| self.count(d)).sum()
    }

    /// Boundary matrix of dimension `d`: rows are `(d-1)`-simplices, columns
    /// are `d`-simplices, entries are alternating sums over the face maps.
    pub fn boundary_matrix(&self, d: usize) -> IntMatrix {
        assert!(d >= 1);
        let mut m = IntMatrix::zero(self.count(d - 1), self.count(d));
        for s in 0..self.count(d) {
            for (i, &f) in self.face_list(d, s).iter().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m.set(f, s, m.get(f, s) + sign);
            }
        }
        m
    }

    /// Number of path components of the 1-skeleton.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != c {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for e in 0..self.count(1) {
            let (a, b) = self.edge_endpoints(e);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        (0..self.vertex_count).filter(|&v| find(&mut parent, v) == v).count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Map from ordered vertex tuple to the simplices carrying it, for one
    /// dimension. A complex where some tuple is shared by two simplices is
    /// not vertex-determined.
    pub fn tuple_index(&self, d: usize) -> HashMap<Vec<usize>, Vec<usize>> {
        let mut map: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for s in 0..self.count(d) {
            map.entry(self.vertex_tuple(d, s)).or_default().push(s);
        }
        map
    }
}

/// Alternating-sum boundary operator of one dimension.
#[derive(Debug, Clone)]
pub struct ChainBoundary {
    pub dimension: usize,
    pub matrix: IntMatrix,
}

impl ChainBoundary {
    pub fn of(c: &DeltaComplex, d: usize) -> ChainBoundary {
        ChainBoundary { dimension: d, matrix: c.boundary_matrix(d) }
    }
}

/// `H_n` over the integers via Smith normal form.
///
/// For a free chain complex the group is `Z^(c_n - r_n - r_{n+1})` plus the
/// invariant factors >= 2 of the Smith form of the boundary in dimension
/// `n+1`.
pub fn homology(c: &DeltaComplex, n: usize) -> Result<AbelianGroupStructure, DeltaError> {
    if n > c.dim() {
        return Err(DeltaError::DimensionOutOfRange { n, dim: c.dim() });
    }
    let c_n = c.count(n);
    let rank_down = if n == 0 { 0 } else { rank(&c.boundary_matrix(n))? };
    let (rank_up, torsion) = if n + 1 > c.dim() {
        (0, Vec::new())
    } else {
        let diag = smith_diagonal(&c.boundary_matrix(n + 1))?;
        let r = diag.iter().filter(|&&d| d != 0).count();
        (r, torsion_factors(&diag))
    };
    Ok(AbelianGroupStructure { free_rank: c_n - rank_down - rank_up, torsion })
}

/// One simplex of a shuffle product: carriers in each factor plus a strictly
/// increasing chain of grid points covering every coordinate of both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductSimplex {
    pub left_dim: usize,
    pub left: usize,
    pub right_dim: usize,
    pub right: usize,
    /// Points of `[0..=left_dim] x [0..=right_dim]`, strictly increasing in
    /// the product order with steps in {(1,0),(0,1),(1,1)}.
    pub chain: Vec<(usize, usize)>,
}

/// Shuffle (staircase) triangulation of the product of two complexes, with
/// the projections to both factors recorded.
#[derive(Debug, Clone)]
pub struct ProductComplex {
    pub complex: DeltaComplex,
    records: Vec<Vec<ProductSimplex>>,
    index: Vec<HashMap<ProductSimplex, usize>>,
}

impl ProductComplex {
    pub fn record(&self, d: usize, s: usize) -> &ProductSimplex {
        &self.records[d][s]
    }

    /// Carrier simplex in the left factor: (dimension, simplex).
    pub fn project_left(&self, d: usize, s: usize) -> (usize, usize) {
        let r = &self.records[d][s];
        (r.left_dim, r.left)
    }

    pub fn project_right(&self, d: usize, s: usize) -> (usize, usize) {
        let r = &self.records[d][s];
        (r.right_dim, r.right)
    }

    /// Product vertex for a pair of factor vertices.
    pub fn vertex_of_pair(&self, va: usize, vb: usize) -> usize {
        self.index[0][&ProductSimplex {
            left_dim: 0,
            left: va,
            right_dim: 0,
            right: vb,
            chain: vec![(0, 0)],
        }]
    }

    pub fn index_of(&self, d: usize, key: &ProductSimplex) -> Option<usize> {
        self.index.get(d).and_then(|m| m.get(key).copied())
    }
}

/// Chains of `len` grid points from (0,0) to (p,q) with steps E/N/D.
fn grid_chains(p: usize, q: usize, len: usize) -> Vec<Vec<(usize, usize)>> {
    fn rec(
        p: usize,
        q: usize,
        len: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let (x, y) = *cur.last().unwrap();
        if cur.len() == len {
            if x == p && y == q {
                out.push(cur.clone());
            }
            return;
        }
        let left = len - cur.len(); // steps still to take
        for (nx, ny) in [(x, y + 1), (x + 1, y), (x + 1, y + 1)] {
            // each remaining step advances each coordinate by at most 1
            if nx <= p && ny <= q && p - nx < left && q - ny < left {
                cur.push((nx, ny));
                rec(p, q, len, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    if len == 1 {
        if p == 0 && q == 0 {
            out.push(vec![(0, 0)]);
        }
        return out;
    }
    let mut cur = vec![(0usize, 0usize)];
    rec(p, q, len, &mut cur, &mut out);
    out
}

/// Shuffle triangulation of `|a| x |b|`.
///
/// Dimension-`r` simplices are triples (p-simplex of `a`, q-simplex of `b`,
/// chain of r+1 grid points covering all of `[p] x [q]`); the top-dimensional
/// ones are exactly the (p,q)-shuffles.
pub fn product(
    a: &DeltaComplex,
    b: &DeltaComplex,
    caps: &Caps,
) -> Result<ProductComplex, DeltaError> {
    let dim = a.dim() + b.dim();
    let mut records: Vec<Vec<ProductSimplex>> = vec![Vec::new(); dim + 1];
    let mut index: Vec<HashMap<ProductSimplex, usize>> = vec![HashMap::new(); dim + 1];
    let mut total = 0usize;
    for (r, recs) in records.iter_mut().enumerate() {
        for p in 0..=a.dim().min(r) {
            for q in 0..=b.dim().min(r) {
                if p + q < r {
                    continue;
                }
                let chains = grid_chains(p, q, r + 1);
                if chains.is_empty() {
                    continue;
                }
                total += a.count(p) * b.count(q) * chains.len();
                if total > caps.simplex_limit {
                    return Err(DeltaError::SizeCapExceeded {
                        needed: total,
                        cap: caps.simplex_limit,
                    });
                }
                for left in 0..a.count(p) {
                    for right in 0..b.count(q) {
                        for chain in &chains {
                            let ps = ProductSimplex {
                                left_dim: p,
                                left,
                                right_dim: q,
                                right,
                                chain: chain.clone(),
                            };
                            index[r].insert(ps.clone(), recs.len());
                            recs.push(ps);
                        }
                    }
                }
            }
        }
    }
    // face maps: delete chain point i, contracting a carrier when one of its
    // coordinate values disappears from the chain
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    for r in 1..=dim {
        let mut dim_faces = Vec::with_capacity(records[r].len());
        for ps in &records[r] {
            let mut fl = Vec::with_capacity(r + 1);
            for i in 0..=r {
                let mut chain: Vec<(usize, usize)> = ps.chain.clone();
                let removed = chain.remove(i);
                let miss_x = !chain.iter().any(|&(x, _)| x == removed.0);
                let miss_y = !chain.iter().any(|&(_, y)| y == removed.1);
                let (mut ld, mut ls) = (ps.left_dim, ps.left);
                if miss_x {
                    ls = a.face(ld, ls, removed.0);
                    ld -= 1;
                    for pt in chain.iter_mut() {
                        if pt.0 > removed.0 {
                            pt.0 -= 1;
                        }
                    }
                }
                let (mut rd, mut rs) = (ps.right_dim, ps.right);
                if miss_y {
                    rs = b.face(rd, rs, removed.1);
                    rd -= 1;
                    for pt in chain.iter_mut() {
                        if pt.1 > removed.1 {
                            pt.1 -= 1;
                        }
                    }
                }
                let key = ProductSimplex { left_dim: ld, left: ls, right_dim: rd, right: rs, chain };
                let f = *index[r - 1].get(&key).expect("product face exists");
                fl.push(f);
            }
            dim_faces.push(fl);
        }
        faces.push(dim_faces);
    }
    let complex = DeltaComplex::new(records[0].len(), faces)?;
    Ok(ProductComplex { complex, records, index })
}

/// One simplex of a barycentric subdivision: a strictly increasing chain of
/// iterated faces, encoded by its top simplex and the flag of kept vertex
/// positions (the top's full position set is implicit).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlagSimplex {
    pub top_dim: usize,
    pub top: usize,
    /// Strictly increasing proper nonempty position subsets of the top
    /// simplex, as bitmasks; length = dimension of the subdivision simplex.
    pub flag: Vec<u32>,
}

/// Barycentric subdivision with its bookkeeping.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub complex: DeltaComplex,
    records: Vec<Vec<FlagSimplex>>,
    index: Vec<HashMap<FlagSimplex, usize>>,
    vertex_offsets: Vec<usize>,
}

impl Subdivision {
    /// Subdivision vertex at the barycenter of an original simplex.
    pub fn vertex_for(&self, d: usize, s: usize) -> usize {
        self.vertex_offsets[d] + s
    }

    /// Original simplex under a subdivision vertex: (dimension, simplex).
    pub fn simplex_under_vertex(&self, v: usize) -> (usize, usize) {
        let d = self
            .vertex_offsets
            .iter()
            .rposition(|&off| off <= v)
            .expect("vertex in range");
        (d, v - self.vertex_offsets[d])
    }

    pub fn record(&self, d: usize, s: usize) -> &FlagSimplex {
        &self.records[d][s]
    }

    pub fn index_of(&self, d: usize, key: &FlagSimplex) -> Option<usize> {
        self.index.get(d).and_then(|m| m.get(key).copied())
    }
}

/// Strictly increasing chains (by inclusion) of proper nonempty submasks of
/// `full`, of length `len`, deterministically ordered.
fn submask_chains(full: u32, len: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut subs: Vec<u32> = Vec::new();
    let mut sub = (full.wrapping_sub(1)) & full;
    while sub != 0 {
        subs.push(sub);
        sub = (sub - 1) & full;
    }
    subs.sort_unstable();
    let mut out = Vec::new();
    for s in subs {
        for mut chain in submask_chains(s, len - 1) {
            chain.push(s);
            out.push(chain);
        }
    }
    out
}

/// Barycentric subdivision: vertices are the simplices of `c` ordered by
/// dimension, simplices are strict chains of iterated faces; the geometric
/// realization (and hence homology) is unchanged.
pub fn barycentric_subdivision(c: &DeltaComplex, caps: &Caps) -> Result<Subdivision, DeltaError> {
    let dim = c.dim();
    let mut vertex_offsets = vec![0usize; dim + 1];
    for d in 1..=dim {
        vertex_offsets[d] = vertex_offsets[d - 1] + c.count(d - 1);
    }
    let vertex_count = vertex_offsets[dim] + c.count(dim);

    let mut records: Vec<Vec<FlagSimplex>> = vec![Vec::new(); dim + 1];
    let mut index: Vec<HashMap<FlagSimplex, usize>> = vec![HashMap::new(); dim + 1];
    let mut total = 0usize;
    for r in 0..=dim {
        for d in r..=dim {
            let full: u32 = (1u32 << (d + 1)) - 1;
            let chains = submask_chains(full, r);
            for s in 0..c.count(d) {
                for chain in &chains {
                    let fs = FlagSimplex { top_dim: d, top: s, flag: chain.clone() };
                    index[r].insert(fs.clone(), records[r].len());
                    records[r].push(fs);
                    total += 1;
                    if total > caps.simplex_limit {
                        return Err(DeltaError::SizeCapExceeded {
                            needed: total,
                            cap: caps.simplex_limit,
                        });
                    }
                }
            }
        }
    }

    let positions = |mask: u32| -> Vec<usize> { (0..32).filter(|i| mask & (1 << i) != 0).collect() };

    let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
    for r in 1..=dim {
        let mut dim_faces = Vec::with_capacity(records[r].len());
        for fs in &records[r] {
            let mut fl = Vec::with_capacity(r + 1);
            for i in 0..=r {
                let key = if i < r {
                    let mut flag = fs.flag.clone();
                    flag.remove(i);
                    FlagSimplex { top_dim: fs.top_dim, top: fs.top, flag }
                } else {
                    // drop the top: the largest flag entry becomes the top
                    let keep_mask = fs.flag[r - 1];
                    let keep = positions(keep_mask);
                    let (nd, ns) = c.iterated_face(fs.top_dim, fs.top, &keep);
                    let flag = fs.flag[..r - 1]
                        .iter()
                        .map(|&m| {
                            let mut out = 0u32;
                            for (new_pos, &old_pos) in keep.iter().enumerate() {
                                if m & (1 << old_pos) != 0 {
                                    out |= 1 << new_pos;
                                }
                            }
                            out
                        })
                        .collect();
                    FlagSimplex { top_dim: nd, top: ns, flag }
                };
                let f = *index[r - 1].get(&key).expect("subdivision face exists");
                fl.push(f);
            }
            dim_faces.push(fl);
        }
        faces.push(dim_faces);
    }
    debug_assert!(records[0]
        .iter()
        .enumerate()
        .all(|(i, fs)| vertex_offsets[fs.top_dim] + fs.top == i));
    let complex = DeltaComplex::new(vertex_count, faces)?;
    Ok(Subdivision { complex, records, index, vertex_offsets })
}

/// Simplex counts per dimension; the Euler characteristic is the
/// alternating sum.
pub fn f_vector(c: &DeltaComplex) -> Vec<usize> {
    c.f_vector()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn caps() -> Caps {
        Caps::default()
    }

    fn homology_vec(c: &DeltaComplex, top: usize) -> Vec<AbelianGroupStructure> {
        (0..=top).map(|n| homology(c, n).unwrap()).collect()
    }

    #[test]
    fn triangle_boundary_is_a_circle() {
        let c = fixtures::circle(3);
        assert_eq!(c.f_vector(), vec![3, 3]);
        let h = homology_vec(&c, 1);
        assert_eq!(h[0], AbelianGroupStructure::free(1));
        assert_eq!(h[1], AbelianGroupStructure::free(1));
    }

    #[test]
    fn torus_homology() {
        let t = fixtures::torus();
        let h = homology_vec(&t, 2);
        assert_eq!(h[0], AbelianGroupStructure::free(1));
        assert_eq!(h[1], AbelianGroupStructure::free(2));
        assert_eq!(h[2], AbelianGroupStructure::free(1));
        assert_eq!(t.euler_characteristic(), 0);
    }

    #[test]
    fn boundary_matrices_compose_to_zero() {
        for c in [fixtures::torus(), fixtures::filled_triangle(), fixtures::standard_simplex(3)] {
            for d in 2..=c.dim() {
                let a = c.boundary_matrix(d - 1);
                let b = c.boundary_matrix(d);
                let prod = a.mul(&b).unwrap();
                assert_eq!(prod, IntMatrix::zero(prod.rows(), prod.cols()));
            }
        }
    }

    #[test]
    fn dimension_out_of_range() {
        let c = fixtures::circle(3);
        assert!(matches!(homology(&c, 2), Err(DeltaError::DimensionOutOfRange { .. })));
    }

    #[test]
    fn vertex_tuples() {
        let tri = fixtures::standard_simplex(2);
        assert_eq!(tri.vertex_tuple(2, 0), vec![0, 1, 2]);
        // face i of the triangle drops vertex i
        let f0 = tri.face(2, 0, 0);
        assert_eq!(tri.vertex_tuple(1, f0), vec![1, 2]);
        let f1 = tri.face(2, 0, 1);
        assert_eq!(tri.vertex_tuple(1, f1), vec![0, 2]);
    }

    #[test]
    fn point_times_complex_is_isomorphic() {
        let c = fixtures::torus();
        let p = product(&DeltaComplex::point(), &c, &caps()).unwrap();
        assert_eq!(p.complex.f_vector(), c.f_vector());
        for d in 0..=c.dim() {
            for s in 0..c.count(d) {
                assert_eq!(p.project_right(d, s), (d, s));
            }
        }
        let h = homology_vec(&p.complex, 2);
        assert_eq!(h[1], AbelianGroupStructure::free(2));
    }

    #[test]
    fn square_as_two_triangles() {
        let edge = fixtures::standard_simplex(1);
        let p = product(&edge, &edge, &caps()).unwrap();
        assert_eq!(p.complex.f_vector(), vec![4, 5, 2]);
        assert_eq!(p.complex.euler_characteristic(), 1);
        let h = homology_vec(&p.complex, 2);
        assert_eq!(h[0], AbelianGroupStructure::free(1));
        assert!(h[1].is_trivial());
        assert!(h[2].is_trivial());
    }

    #[test]
    fn circle_times_circle_is_a_torus() {
        let c = fixtures::circle(3);
        let p = product(&c, &c, &caps()).unwrap();
        assert_eq!(p.complex.euler_characteristic(), 0);
        let h = homology_vec(&p.complex, 2);
        assert_eq!(h[0], AbelianGroupStructure::free(1));
        assert_eq!(h[1], AbelianGroupStructure::free(2));
        assert_eq!(h[2], AbelianGroupStructure::free(1));
    }

    #[test]
    fn euler_characteristic_multiplies() {
        let cases = [
            (fixtures::circle(3), fixtures::standard_simplex(1)),
            (fixtures::filled_triangle(), fixtures::circle(4)),
            (fixtures::standard_simplex(2), fixtures::standard_simplex(2)),
        ];
        for (a, b) in cases {
            let p = product(&a, &b, &caps()).unwrap();
            assert_eq!(
                p.complex.euler_characteristic(),
                a.euler_characteristic() * b.euler_characteristic()
            );
        }
    }

    #[test]
    fn subdivision_counts() {
        let seg = fixtures::standard_simplex(1);
        let sd = barycentric_subdivision(&seg, &caps()).unwrap();
        assert_eq!(sd.complex.f_vector(), vec![3, 2]);
        let tri = fixtures::standard_simplex(2);
        let sd = barycentric_subdivision(&tri, &caps()).unwrap();
        assert_eq!(sd.complex.f_vector(), vec![7, 12, 6]);
    }

    #[test]
    fn subdivision_of_a_loop_is_a_circle() {
        let c = fixtures::circle(1);
        assert_eq!(c.f_vector(), vec![1, 1]);
        let sd = barycentric_subdivision(&c, &caps()).unwrap();
        assert_eq!(sd.complex.f_vector(), vec![2, 2]);
        let h = homology(&sd.complex, 1).unwrap();
        assert_eq!(h, AbelianGroupStructure::free(1));
    }

    #[test]
    fn subdivision_preserves_homology() {
        for c in [fixtures::torus(), fixtures::rp2(), fixtures::circle(3)] {
            let sd = barycentric_subdivision(&c, &caps()).unwrap();
            for n in 0..=c.dim() {
                assert_eq!(
                    homology(&c, n).unwrap(),
                    homology(&sd.complex, n).unwrap(),
                    "degree {n}"
                );
            }
        }
    }

    #[test]
    fn rp2_fixture_homology() {
        let c = fixtures::rp2();
        assert_eq!(c.f_vector(), vec![3, 6, 4]);
        let h = homology_vec(&c, 2);
        assert_eq!(h[0], AbelianGroupStructure::free(1));
        assert_eq!(h[1], AbelianGroupStructure { free_rank: 0, torsion: vec![2] });
        assert!(h[2].is_trivial());
    }

    #[test]
    fn octahedron_f_vector_and_sphere_homology() {
        let c = fixtures::octahedron();
        assert_eq!(c.f_vector(), vec![6, 12, 8]);
        assert_eq!(c.euler_characteristic(), 2);
        let h = homology_vec(&c, 2);
        assert_eq!(h[0], AbelianGroupStructure::free(1));
        assert!(h[1].is_trivial());
        assert_eq!(h[2], AbelianGroupStructure::free(1));
    }

    #[test]
    fn empty_complex() {
        let c = DeltaComplex::new(0, Vec::new()).unwrap();
        assert_eq!(c.f_vector(), Vec::<usize>::new());
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn size_cap_enforced() {
        let tri = fixtures::standard_simplex(2);
        let caps = Caps { simplex_limit: 10, ..Caps::default() };
        assert!(matches!(product(&tri, &tri, &caps), Err(DeltaError::SizeCapExceeded { .. })));
        assert!(matches!(
            barycentric_subdivision(&tri, &caps),
            Err(DeltaError::SizeCapExceeded { .. })
        ));
    }
}
