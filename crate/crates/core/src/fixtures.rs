//! Built-in complexes and small groups used by tests, docs and the CLI's
//! fixture seeding.

use crate::delta::DeltaComplex;

/// Standard d-simplex: k-simplices are the (k+1)-subsets of {0..=d} in
/// lexicographic order; face i removes the i-th smallest vertex.
pub fn standard_simplex(d: usize) -> DeltaComplex {
    fn subsets(d: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for v in start..=d {
                cur.push(v);
                rec(v + 1, d, k, cur, out);
                cur.pop();
            }
        }
        rec(0, d, k, &mut cur, &mut out);
        out
    }
    let mut faces = Vec::new();
    let mut prev = subsets(d, 1);
    for k in 1..=d {
        let cur = subsets(d, k + 1);
        let lookup: std::collections::HashMap<&[usize], usize> =
            prev.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut dim_faces = Vec::new();
        for s in &cur {
            let mut fl = Vec::new();
            for i in 0..s.len() {
                let mut f = s.clone();
                f.remove(i);
                fl.push(lookup[f.as_slice()]);
            }
            dim_faces.push(fl);
        }
        faces.push(dim_faces);
        prev = cur;
    }
    DeltaComplex::new(d + 1, faces).expect("standard simplex is valid")
}

/// A single 2-simplex with its boundary.
pub fn filled_triangle() -> DeltaComplex {
    standard_simplex(2)
}

/// Cycle with `n` vertices and `n` edges; `n = 1` is a loop on one vertex.
pub fn circle(n: usize) -> DeltaComplex {
    assert!(n >= 1);
    let edges = (0..n).map(|i| vec![(i + 1) % n, i]).collect();
    DeltaComplex::new(n, vec![edges]).expect("cycle is valid")
}

/// Path with `n` edges on `n + 1` vertices, oriented left to right.
pub fn path(n: usize) -> DeltaComplex {
    let edges = (0..n).map(|i| vec![i + 1, i]).collect();
    DeltaComplex::new(n + 1, vec![edges]).expect("path is valid")
}

/// Two-edge path with both edges pointing at the middle vertex, so the
/// end-swapping reflection maps ordered simplices to ordered simplices.
pub fn mirrored_path() -> DeltaComplex {
    DeltaComplex::new(3, vec![vec![vec![1, 0], vec![1, 2]]]).expect("mirrored path is valid")
}

/// The standard one-vertex torus: edges a, b, c and two triangles glued
/// along the diagonal.
pub fn torus() -> DeltaComplex {
    let edges = vec![vec![0, 0], vec![0, 0], vec![0, 0]];
    let triangles = vec![vec![1, 2, 0], vec![0, 2, 1]];
    DeltaComplex::new(1, vec![edges, triangles]).expect("torus is valid")
}

/// Octahedron as the 3-fold join of a 2-point set: vertices are
/// (element, copy) pairs indexed `copy * 2 + element`, a simplex picks one
/// vertex in each of several distinct copies.
pub fn octahedron() -> DeltaComplex {
    // copy pairs in lex order: (0,1), (0,2), (1,2)
    let pair = [(0usize, 1usize), (0, 2), (1, 2)];
    let mut edges = Vec::new();
    for &(lo, hi) in &pair {
        for s0 in 0..2 {
            for s1 in 0..2 {
                edges.push(vec![hi * 2 + s1, lo * 2 + s0]);
            }
        }
    }
    let mut triangles = Vec::new();
    for s0 in 0..2 {
        for s1 in 0..2 {
            for s2 in 0..2 {
                triangles.push(vec![
                    2 * 4 + s1 * 2 + s2, // copies (1,2)
                    1 * 4 + s0 * 2 + s2, // copies (0,2)
                    s0 * 2 + s1,         // copies (0,1)
                ]);
            }
        }
    }
    DeltaComplex::new(6, vec![edges, triangles]).expect("octahedron is valid")
}

/// Antipodal involution of [`octahedron`] on vertices.
pub fn octahedron_antipodal_vertex_map() -> Vec<usize> {
    (0..6).map(|v| (v / 2) * 2 + (1 - v % 2)).collect()
}

/// Projective plane as the antipodal quotient of the octahedron:
/// f-vector (3, 6, 4).
pub fn rp2() -> DeltaComplex {
    let edges = vec![
        vec![1, 0],
        vec![1, 0],
        vec![2, 0],
        vec![2, 0],
        vec![2, 1],
        vec![2, 1],
    ];
    let triangles = vec![vec![4, 2, 0], vec![5, 3, 0], vec![5, 2, 1], vec![4, 3, 1]];
    DeltaComplex::new(3, vec![edges, triangles]).expect("projective plane is valid")
}
