//! Finite groups as explicit Cayley tables.
//!
//! Every group in the pipeline is a validated multiplication table over
//! element indices `0..order`. The identity is located automatically and
//! need not be index 0. All set-valued results are sorted so that outputs
//! are deterministic across runs.

use crate::caps::Caps;
use thiserror::Error;

/// Element of a [`FiniteGroup`], an index into its Cayley table.
pub type Elem = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("table is not square: row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry {value} at ({row},{col}) is out of range 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("table is not a Latin square: {value} repeats in {axis} {index}")]
    NotLatinSquare { axis: &'static str, index: usize, value: usize },
    #[error("not associative at ({a},{b},{c}): ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: Elem },
    #[error("map is not a homomorphism at ({a},{b})")]
    NotHomomorphism { a: Elem, b: Elem },
    #[error("homomorphism image has wrong length {len} for source order {order}")]
    BadHomLength { len: usize, order: usize },
    #[error("hom image entry {value} out of range for target order {order}")]
    HomEntryOutOfRange { value: usize, order: usize },
    #[error("subgroup is not normal: conjugating element {conjugator} moves {element} outside")]
    NotNormal { conjugator: Elem, element: Elem },
    #[error("subgroup element {element} out of range for parent order {order}")]
    SubgroupElementOutOfRange { element: usize, order: usize },
    #[error("subgroup is not closed: {a}*{b} escapes")]
    SubgroupNotClosed { a: Elem, b: Elem },
    #[error("group order {order} exceeds cap {cap} for {operation}")]
    OrderCapExceeded { order: usize, cap: usize, operation: &'static str },
}

/// A finite group given by an explicit Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Elem>,
    identity: Elem,
    inverses: Vec<Elem>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates the four group axioms on `table` and locates the identity.
    ///
    /// Errors name the first violating tuple in scan order.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::NoIdentity);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::NotSquare { row, len: r.len(), order });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange { row, col, value, order });
                }
            }
        }
        // Latin square: each row and column is a permutation.
        for (i, r) in table.iter().enumerate() {
            let mut seen = vec![false; order];
            for &v in r {
                if seen[v] {
                    return Err(GroupError::NotLatinSquare { axis: "row", index: i, value: v });
                }
                seen[v] = true;
            }
        }
        for j in 0..order {
            let mut seen = vec![false; order];
            for r in &table {
                let v = r[j];
                if seen[v] {
                    return Err(GroupError::NotLatinSquare { axis: "column", index: j, value: v });
                }
                seen[v] = true;
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverses = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverses[a] = b,
                None => return Err(GroupError::NoInverse { element: a }),
            }
        }
        let flat: Vec<Elem> = table.into_iter().flatten().collect();
        Ok(FiniteGroup { order, table: flat, identity, inverses, labels: None })
    }

    /// Attaches element labels (used for reports; no semantic effect).
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.order {
            self.labels = Some(labels);
        }
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, e: Elem) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    pub fn pow(&self, a: Elem, n: usize) -> Elem {
        let mut acc = self.identity;
        for _ in 0..n {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut acc = a;
        let mut n = 1;
        while acc != self.identity {
            acc = self.mul(acc, a);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted multiset of element orders; cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        p.sort_unstable();
        p
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    /// The one-element group.
    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_table(vec![vec![0]]).expect("trivial group is valid")
    }

    /// Cyclic group of order `n` with table (i,j) -> i+j mod n.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteGroup::from_table(table).expect("cyclic table is valid")
    }

    /// Direct product with pair index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let n = a.order * b.order;
        let mut table = vec![vec![0usize; n]; n];
        for x0 in 0..a.order {
            for x1 in 0..b.order {
                for y0 in 0..a.order {
                    for y1 in 0..b.order {
                        table[x0 * b.order + x1][y0 * b.order + y1] =
                            a.mul(x0, y0) * b.order + b.mul(x1, y1);
                    }
                }
            }
        }
        FiniteGroup::from_table(table).expect("product table is valid")
    }

    /// Dihedral group of order `2n`: elements `r^i` (indices `0..n`) and
    /// `s r^i` (indices `n..2n`), with `s r s = r^{-1}`.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let m = 2 * n;
        let mut table = vec![vec![0usize; m]; m];
        for i in 0..m {
            for j in 0..m {
                let (fi, ri) = (i >= n, i % n);
                let (fj, rj) = (j >= n, j % n);
                // (s^a r^i)(s^b r^j) = s^(a+b) r^(±i+j)
                let rot = if fj { (n - ri % n) % n + rj } else { ri + rj } % n;
                let flip = fi ^ fj;
                table[i][j] = if flip { n + rot } else { rot };
            }
        }
        FiniteGroup::from_table(table).expect("dihedral table is valid")
    }

    /// Quaternion group of order 8: 1,-1,i,-i,j,-j,k,-k.
    pub fn quaternion8() -> FiniteGroup {
        // encode q = (sign, axis) with axis in {1,i,j,k}
        let unit = |s: usize, a: usize| s * 4 + a;
        let mul1 = |a: usize, b: usize| -> (usize, usize) {
            // multiplication of {1,i,j,k}, returning (sign flip, axis)
            match (a, b) {
                (0, x) => (0, x),
                (x, 0) => (0, x),
                (1, 1) => (1, 0),
                (2, 2) => (1, 0),
                (3, 3) => (1, 0),
                (1, 2) => (0, 3),
                (2, 1) => (1, 3),
                (2, 3) => (0, 1),
                (3, 2) => (1, 1),
                (3, 1) => (0, 2),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        };
        let mut table = vec![vec![0usize; 8]; 8];
        for s1 in 0..2 {
            for a1 in 0..4 {
                for s2 in 0..2 {
                    for a2 in 0..4 {
                        let (flip, axis) = mul1(a1, a2);
                        table[unit(s1, a1)][unit(s2, a2)] = unit((s1 + s2 + flip) % 2, axis);
                    }
                }
            }
        }
        FiniteGroup::from_table(table).expect("quaternion table is valid")
    }
}

/// A homomorphism between two explicit finite groups, stored pointwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    image: Vec<Elem>,
}

impl GroupHom {
    /// Validates `image[x*y] = image[x]*image[y]`; the identity condition
    /// follows for maps between groups.
    pub fn new(
        source: FiniteGroup,
        target: FiniteGroup,
        image: Vec<Elem>,
    ) -> Result<GroupHom, GroupError> {
        if image.len() != source.order() {
            return Err(GroupError::BadHomLength { len: image.len(), order: source.order() });
        }
        for &v in &image {
            if v >= target.order() {
                return Err(GroupError::HomEntryOutOfRange { value: v, order: target.order() });
            }
        }
        for a in source.elements() {
            for b in source.elements() {
                if image[source.mul(a, b)] != target.mul(image[a], image[b]) {
                    return Err(GroupError::NotHomomorphism { a, b });
                }
            }
        }
        Ok(GroupHom { source, target, image })
    }

    pub fn identity(g: &FiniteGroup) -> GroupHom {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            image: g.elements().collect(),
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn image(&self) -> &[Elem] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.image[a]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.image.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &v in &self.image {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    /// `other` then `self`; requires matching middle group.
    pub fn compose(&self, other: &GroupHom) -> GroupHom {
        assert_eq!(other.target, self.source, "compose: middle group mismatch");
        GroupHom {
            source: other.source.clone(),
            target: self.target.clone(),
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> GroupHom {
        assert!(self.is_bijective(), "inverse of non-bijective hom");
        let mut image = vec![0; self.target.order()];
        for a in self.source.elements() {
            image[self.image[a]] = a;
        }
        GroupHom { source: self.target.clone(), target: self.source.clone(), image }
    }

    /// Preimages of `t`, sorted.
    pub fn fiber(&self, t: Elem) -> Vec<Elem> {
        self.source.elements().filter(|&a| self.image[a] == t).collect()
    }
}

/// A subgroup of a parent group, stored as a sorted element set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: FiniteGroup,
    elements: Vec<Elem>,
}

impl Subgroup {
    /// Validates closure, inverses and identity membership.
    pub fn new(parent: FiniteGroup, mut elements: Vec<Elem>) -> Result<Subgroup, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        for &e in &elements {
            if e >= parent.order() {
                return Err(GroupError::SubgroupElementOutOfRange {
                    element: e,
                    order: parent.order(),
                });
            }
        }
        let member = |x: Elem| elements.binary_search(&x).is_ok();
        if !member(parent.identity()) {
            return Err(GroupError::NoIdentity);
        }
        for &a in &elements {
            if !member(parent.inv(a)) {
                return Err(GroupError::NoInverse { element: a });
            }
            for &b in &elements {
                if !member(parent.mul(a, b)) {
                    return Err(GroupError::SubgroupNotClosed { a, b });
                }
            }
        }
        Ok(Subgroup { parent, elements })
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn is_normal(&self) -> Result<(), GroupError> {
        for g in self.parent.elements() {
            let gi = self.parent.inv(g);
            for &h in &self.elements {
                let conj = self.parent.mul(self.parent.mul(g, h), gi);
                if !self.contains(conj) {
                    return Err(GroupError::NotNormal { conjugator: g, element: h });
                }
            }
        }
        Ok(())
    }

    /// The subgroup as a standalone group, with the inclusion hom.
    pub fn as_group(&self) -> (FiniteGroup, GroupHom) {
        let n = self.elements.len();
        let pos = |x: Elem| self.elements.binary_search(&x).expect("closed subgroup");
        let table = (0..n)
            .map(|i| (0..n).map(|j| pos(self.parent.mul(self.elements[i], self.elements[j]))).collect())
            .collect();
        let group = FiniteGroup::from_table(table).expect("subgroup table is valid");
        let inclusion = GroupHom {
            source: group.clone(),
            target: self.parent.clone(),
            image: self.elements.clone(),
        };
        (group, inclusion)
    }
}

/// Closure of `gens` (plus the identity) under multiplication.
pub fn subgroup_generated(g: &FiniteGroup, gens: &[Elem]) -> Subgroup {
    for &x in gens {
        assert!(x < g.order(), "generator out of range");
    }
    let mut in_set = vec![false; g.order()];
    in_set[g.identity()] = true;
    let mut frontier: Vec<Elem> = vec![g.identity()];
    let mut members = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            for y in [g.mul(x, s), g.mul(s, x)] {
                if !in_set[y] {
                    in_set[y] = true;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
    }
    members.sort_unstable();
    Subgroup { parent: g.clone(), elements: members }
}

/// Quotient of `g` by a normal subgroup, on sorted smallest-member coset
/// representatives, together with the canonical surjection.
pub fn quotient_group(
    g: &FiniteGroup,
    n: &Subgroup,
) -> Result<(FiniteGroup, GroupHom), GroupError> {
    assert_eq!(n.parent(), g, "subgroup of a different group");
    n.is_normal()?;
    let order = g.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps: Vec<Elem> = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        // left coset x*N; smallest member is the representative, and since
        // elements are scanned in increasing order that member is x itself.
        let idx = reps.len();
        reps.push(x);
        for &h in n.elements() {
            coset_of[g.mul(x, h)] = idx;
        }
    }
    let q = reps.len();
    debug_assert_eq!(q * n.order(), order);
    let mut table = vec![vec![0usize; q]; q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i][j] = coset_of[g.mul(a, b)];
        }
    }
    let quotient = FiniteGroup::from_table(table)?;
    let projection = GroupHom {
        source: g.clone(),
        target: quotient.clone(),
        image: coset_of,
    };
    Ok((quotient, projection))
}

/// Kernel of a homomorphism as a subgroup of the source.
pub fn kernel_subgroup(h: &GroupHom) -> Subgroup {
    let e = h.target().identity();
    let elements: Vec<Elem> = h.source().elements().filter(|&a| h.apply(a) == e).collect();
    Subgroup { parent: h.source().clone(), elements }
}

/// Greedy minimal generating sequence: repeatedly adjoin the smallest
/// element outside the current closure.
pub fn minimal_generating_set(g: &FiniteGroup) -> Vec<Elem> {
    let mut gens: Vec<Elem> = Vec::new();
    let mut span = subgroup_generated(g, &gens);
    while span.order() < g.order() {
        let next = g.elements().find(|&x| !span.contains(x)).expect("proper subgroup");
        gens.push(next);
        span = subgroup_generated(g, &gens);
    }
    gens
}

/// Extends a partial map on generators to a homomorphism by closure.
///
/// `seeds` are (source element, target element) pairs whose first components
/// generate the source. Returns the full image array, or None on conflict.
fn close_homomorphism(
    source: &FiniteGroup,
    target: &FiniteGroup,
    seeds: &[(Elem, Elem)],
) -> Option<Vec<Elem>> {
    let mut image = vec![usize::MAX; source.order()];
    image[source.identity()] = target.identity();
    let mut known: Vec<Elem> = vec![source.identity()];
    for &(s, t) in seeds {
        if image[s] != usize::MAX {
            if image[s] != t {
                return None;
            }
            continue;
        }
        image[s] = t;
        known.push(s);
    }
    // close under products of known elements
    let mut i = 0;
    while i < known.len() {
        let a = known[i];
        let mut j = 0;
        while j < known.len() {
            let b = known[j];
            for (p, q) in [
                (source.mul(a, b), target.mul(image[a], image[b])),
                (source.mul(b, a), target.mul(image[b], image[a])),
            ] {
                if image[p] == usize::MAX {
                    image[p] = q;
                    known.push(p);
                } else if image[p] != q {
                    return None;
                }
            }
            j += 1;
        }
        i += 1;
    }
    if known.len() < source.order() {
        return None; // seeds did not generate the source
    }
    // full verification: closure checked consistency only on reached products
    for a in source.elements() {
        for b in source.elements() {
            if image[source.mul(a, b)] != target.mul(image[a], image[b]) {
                return None;
            }
        }
    }
    Some(image)
}

/// All homomorphisms `source -> target` extending the generator assignment
/// search; used for automorphism and isomorphism enumeration.
fn search_homs(
    source: &FiniteGroup,
    target: &FiniteGroup,
    bijective_only: bool,
    first_only: bool,
) -> Vec<GroupHom> {
    let gens = minimal_generating_set(source);
    let mut out: Vec<GroupHom> = Vec::new();
    // candidate images per generator, filtered by order divisibility
    let mut stack: Vec<(usize, Elem)> = Vec::new();
    let gen_orders: Vec<usize> = gens.iter().map(|&x| source.element_order(x)).collect();
    fn rec(
        source: &FiniteGroup,
        target: &FiniteGroup,
        gens: &[Elem],
        gen_orders: &[usize],
        stack: &mut Vec<(usize, Elem)>,
        out: &mut Vec<GroupHom>,
        bijective_only: bool,
        first_only: bool,
    ) {
        if first_only && !out.is_empty() {
            return;
        }
        let depth = stack.len();
        if depth == gens.len() {
            let seeds: Vec<(Elem, Elem)> =
                gens.iter().copied().zip(stack.iter().map(|&(_, t)| t)).collect();
            if let Some(image) = close_homomorphism(source, target, &seeds) {
                let hom = GroupHom {
                    source: source.clone(),
                    target: target.clone(),
                    image,
                };
                if !bijective_only || hom.is_bijective() {
                    out.push(hom);
                }
            }
            return;
        }
        for t in target.elements() {
            // image order must divide generator order
            if bijective_only {
                if target.element_order(t) != gen_orders[depth] {
                    continue;
                }
            } else if gen_orders[depth] % target.element_order(t) != 0 {
                continue;
            }
            stack.push((depth, t));
            rec(source, target, gens, gen_orders, stack, out, bijective_only, first_only);
            stack.pop();
            if first_only && !out.is_empty() {
                return;
            }
        }
    }
    if gens.is_empty() {
        // trivial source
        let image = vec![target.identity()];
        let hom = GroupHom { source: source.clone(), target: target.clone(), image };
        if !bijective_only || hom.is_bijective() {
            out.push(hom);
        }
        return out;
    }
    rec(source, target, &gens, &gen_orders, &mut stack, &mut out, bijective_only, first_only);
    out
}

/// Complete automorphism list, sorted lexicographically by image array.
pub fn automorphisms(g: &FiniteGroup, caps: &Caps) -> Result<Vec<GroupHom>, GroupError> {
    if g.order() > caps.automorphism_order {
        return Err(GroupError::OrderCapExceeded {
            order: g.order(),
            cap: caps.automorphism_order,
            operation: "automorphisms",
        });
    }
    let mut auts = search_homs(g, g, true, false);
    auts.sort_by(|a, b| a.image.cmp(&b.image));
    Ok(auts)
}

/// Every homomorphism `source -> target`, sorted by image array.
pub fn all_homomorphisms(
    source: &FiniteGroup,
    target: &FiniteGroup,
    caps: &Caps,
) -> Result<Vec<GroupHom>, GroupError> {
    if source.order() > caps.isomorphism_order || target.order() > caps.isomorphism_order {
        return Err(GroupError::OrderCapExceeded {
            order: source.order().max(target.order()),
            cap: caps.isomorphism_order,
            operation: "all_homomorphisms",
        });
    }
    let mut homs = search_homs(source, target, false, false);
    homs.sort_by(|a, b| a.image.cmp(&b.image));
    Ok(homs)
}

/// First isomorphism `a -> b` in deterministic search order, if any.
pub fn isomorphism_search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    caps: &Caps,
) -> Result<Option<GroupHom>, GroupError> {
    let max_order = a.order().max(b.order());
    if max_order > caps.isomorphism_order {
        return Err(GroupError::OrderCapExceeded {
            order: max_order,
            cap: caps.isomorphism_order,
            operation: "isomorphism_search",
        });
    }
    if a.order() != b.order() || a.order_profile() != b.order_profile() {
        return Ok(None);
    }
    Ok(search_homs(a, b, true, true).into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn z2_from_table() {
        let g = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn repeated_entry_is_not_latin() {
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, GroupError::NotLatinSquare { index: 1, .. }));
    }

    #[test]
    fn cyclic_four() {
        let g = FiniteGroup::cyclic(4);
        assert_eq!(g.mul(3, 2), 1);
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.element_order(2), 2);
    }

    #[test]
    fn identity_need_not_be_zero() {
        // relabel Z/2 so identity is index 1
        let g = FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.identity(), 1);
    }

    #[test]
    fn latin_but_not_associative_rejected() {
        // order-5 Latin square that is not a group table (a quasigroup):
        // row i: i, i+1, ... shifted, then tweak by a transposition pattern.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 1, 2, 0],
            vec![4, 2, 0, 1, 3],
        ];
        let err = FiniteGroup::from_table(table).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }));
    }

    /// Brute-force automorphism count: all bijections fixing nothing in
    /// particular, checked as homomorphisms. Independent of the search path.
    fn brute_force_automorphism_count(g: &FiniteGroup) -> usize {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..n {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        perms(g.order())
            .into_iter()
            .filter(|img| {
                g.elements().all(|a| {
                    g.elements().all(|b| img[g.mul(a, b)] == g.mul(img[a], img[b]))
                })
            })
            .count()
    }

    #[test]
    fn automorphism_counts_match_brute_force() {
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let v4 = FiniteGroup::direct_product(&z2, &z2);
        assert_eq!(automorphisms(&z2, &caps()).unwrap().len(), 1);
        assert_eq!(automorphisms(&z3, &caps()).unwrap().len(), 2);
        let v4_auts = automorphisms(&v4, &caps()).unwrap();
        assert_eq!(v4_auts.len(), 6); // |GL(2, F_2)|
        assert_eq!(brute_force_automorphism_count(&z3), 2);
        assert_eq!(brute_force_automorphism_count(&v4), 6);
        // closed under composition and inversion, contains the identity
        assert!(v4_auts.iter().any(|a| a.image() == &[0, 1, 2, 3]));
        for a in &v4_auts {
            assert!(v4_auts.iter().any(|c| c.image() == a.inverse().image()));
            for b in &v4_auts {
                let ab = a.compose(b);
                assert!(v4_auts.iter().any(|c| c.image() == ab.image()));
            }
        }
    }

    #[test]
    fn automorphism_cap() {
        let g = FiniteGroup::cyclic(3);
        let caps = Caps { automorphism_order: 2, ..Caps::default() };
        assert!(matches!(
            automorphisms(&g, &caps),
            Err(GroupError::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn subgroup_closure() {
        let z4 = FiniteGroup::cyclic(4);
        assert_eq!(subgroup_generated(&z4, &[2]).elements(), &[0, 2]);
        assert_eq!(subgroup_generated(&z4, &[]).elements(), &[0]);
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(subgroup_generated(&z6, &[2, 3]).order(), 6);
    }

    #[test]
    fn quotient_of_cyclic() {
        let z4 = FiniteGroup::cyclic(4);
        let n = subgroup_generated(&z4, &[2]);
        let (q, proj) = quotient_group(&z4, &n).unwrap();
        assert_eq!(q.order(), 2);
        assert!(proj.is_surjective());
        assert_eq!(proj.apply(2), proj.apply(0));
        assert_eq!(z4.order(), n.order() * q.order());
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let s3 = FiniteGroup::dihedral(3);
        // a reflection generates an order-2 subgroup, never normal in S3
        let refl = s3.elements().find(|&x| x >= 3).unwrap();
        let n = subgroup_generated(&s3, &[refl]);
        assert_eq!(n.order(), 2);
        let err = quotient_group(&s3, &n).unwrap_err();
        assert!(matches!(err, GroupError::NotNormal { .. }));
    }

    #[test]
    fn isomorphism_search_distinguishes() {
        let z4 = FiniteGroup::cyclic(4);
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert!(isomorphism_search(&z4, &v4, &caps()).unwrap().is_none());
        // relabeled Z/4: conjugate the table by the permutation (0 1 2 3) -> (1 0 3 2)? use shift
        let perm = [2usize, 3, 0, 1];
        let mut table = vec![vec![0usize; 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                table[perm[a]][perm[b]] = perm[z4.mul(a, b)];
            }
        }
        let relabeled = FiniteGroup::from_table(table).unwrap();
        let iso = isomorphism_search(&z4, &relabeled, &caps()).unwrap().unwrap();
        assert!(iso.is_bijective());
        let z6 = FiniteGroup::cyclic(6);
        let z2xz3 =
            FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3));
        let crt = isomorphism_search(&z6, &z2xz3, &caps()).unwrap();
        assert!(crt.is_some());
        // symmetric in success
        assert!(isomorphism_search(&z2xz3, &z6, &caps()).unwrap().is_some());
        assert!(isomorphism_search(&v4, &z4, &caps()).unwrap().is_none());
    }

    #[test]
    fn quaternion_and_dihedral_profiles_differ() {
        let q8 = FiniteGroup::quaternion8();
        let d4 = FiniteGroup::dihedral(4);
        assert_eq!(q8.order(), 8);
        assert_eq!(d4.order(), 8);
        assert!(!q8.is_abelian());
        assert!(!d4.is_abelian());
        assert!(isomorphism_search(&q8, &d4, &caps()).unwrap().is_none());
    }

    #[test]
    fn lagrange_on_dihedral() {
        let d4 = FiniteGroup::dihedral(4);
        for x in d4.elements() {
            let h = subgroup_generated(&d4, &[x]);
            assert_eq!(d4.order() % h.order(), 0);
        }
    }

    #[test]
    fn kernel_and_as_group() {
        let z6 = FiniteGroup::cyclic(6);
        let z3 = FiniteGroup::cyclic(3);
        let hom = GroupHom::new(z6.clone(), z3.clone(), vec![0, 1, 2, 0, 1, 2]).unwrap();
        let k = kernel_subgroup(&hom);
        assert_eq!(k.elements(), &[0, 3]);
        let (kg, incl) = k.as_group();
        assert_eq!(kg.order(), 2);
        assert!(incl.is_injective());
    }
}
