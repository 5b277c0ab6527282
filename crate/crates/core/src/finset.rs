//! The skeletal category of finite sets.
//!
//! The object `n` is the set `{0, …, n−1}`. Products use the lexicographic
//! pairing `pair(i, j) = i·|Y| + j` and coproducts shift each summand by the
//! sizes of the preceding ones, so both monoidal structures are strictly
//! associative and strictly unital on the nose. Coequalizers are computed by
//! union-find with minimal representatives, classes numbered in increasing
//! order of their representative.

use alloc::vec;
use alloc::vec::Vec;

use crate::category::{Category, Cocomplete, LeftModule, Monoidal};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SetError {
    #[error("cardinality {size} exceeds cap {cap}")]
    Overflow { size: u128, cap: usize },
    #[error("maps do not form a parallel pair")]
    ShapeMismatch,
}

/// The finite set `{0, …, card−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SkSet(pub usize);

impl SkSet {
    pub fn card(self) -> usize {
        self.0
    }
}

/// A total function between skeletal finite sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkMap {
    cod: usize,
    table: Vec<usize>,
}

impl SkMap {
    pub fn new(cod: usize, table: Vec<usize>) -> Result<SkMap, SetError> {
        if table.iter().any(|&v| v >= cod) {
            return Err(SetError::ShapeMismatch);
        }
        Ok(SkMap { cod, table })
    }

    pub fn identity(n: usize) -> SkMap {
        SkMap {
            cod: n,
            table: (0..n).collect(),
        }
    }

    /// The map `{0} → {0, …, cod−1}` picking `element`.
    pub fn element(cod: usize, element: usize) -> SkMap {
        assert!(element < cod, "element out of range");
        SkMap { cod, table: vec![element] }
    }

    pub fn dom(&self) -> SkSet {
        SkSet(self.table.len())
    }

    pub fn cod(&self) -> SkSet {
        SkSet(self.cod)
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    /// `self ∘ f`, or `None` when the endpoints do not match.
    pub fn after(&self, f: &SkMap) -> Option<SkMap> {
        (f.cod == self.table.len()).then(|| SkMap {
            cod: self.cod,
            table: f.table.iter().map(|&i| self.table[i]).collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.table.len() == self.cod && self.is_surjective()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod];
        for &v in &self.table {
            hit[v] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn inverse(&self) -> Option<SkMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.cod];
        for (i, &v) in self.table.iter().enumerate() {
            table[v] = i;
        }
        Some(SkMap {
            cod: self.table.len(),
            table,
        })
    }
}

/// `pair(i, j) = i·|Y| + j` for `i < |X|`, `j < |Y|`.
pub fn pair(j_card: usize, i: usize, j: usize) -> usize {
    i * j_card + j
}

/// Inverse of [`pair`]: `(i, j)`.
pub fn unpair(j_card: usize, p: usize) -> (usize, usize) {
    (p / j_card, p % j_card)
}

pub fn product(x: SkSet, y: SkSet, cap: usize) -> Result<SkSet, SetError> {
    let size = x.0 as u128 * y.0 as u128;
    if size > cap as u128 {
        return Err(SetError::Overflow { size, cap });
    }
    Ok(SkSet(size as usize))
}

/// `f × g` under the pairing encoding.
pub fn product_map(f: &SkMap, g: &SkMap) -> SkMap {
    let (gd, gc) = (g.table.len(), g.cod);
    let mut table = Vec::with_capacity(f.table.len() * gd);
    for &a in &f.table {
        for &b in &g.table {
            table.push(pair(gc, a, b));
        }
    }
    debug_assert_eq!(table.len(), f.table.len() * gd);
    SkMap { cod: f.cod * gc, table }
}

/// Coproduct apex and the offset of each summand.
pub fn coproduct(parts: &[SkSet], cap: usize) -> Result<(SkSet, Vec<usize>), SetError> {
    let mut offsets = Vec::with_capacity(parts.len());
    let mut total: u128 = 0;
    for p in parts {
        offsets.push(total as usize);
        total += p.0 as u128;
        if total > cap as u128 {
            return Err(SetError::Overflow { size: total, cap });
        }
    }
    Ok((SkSet(total as usize), offsets))
}

pub fn injection(parts: &[SkSet], offsets: &[usize], total: SkSet, k: usize) -> SkMap {
    SkMap {
        cod: total.0,
        table: (offsets[k]..offsets[k] + parts[k].0).collect(),
    }
}

/// `f ⊔ g`.
pub fn sum_map(f: &SkMap, g: &SkMap) -> SkMap {
    let mut table = f.table.clone();
    table.extend(g.table.iter().map(|&b| b + f.cod));
    SkMap { cod: f.cod + g.cod, table }
}

/// Disjoint sets with the minimal element of each class as its root.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// Coequalizer of `f, g: X ⇉ Y`: the quotient `Q` and the canonical surjection `Y → Q`.
pub fn coequalizer(f: &SkMap, g: &SkMap) -> Result<(SkSet, SkMap), SetError> {
    if f.table.len() != g.table.len() || f.cod != g.cod {
        return Err(SetError::ShapeMismatch);
    }
    let mut uf = UnionFind::new(f.cod);
    for (&a, &b) in f.table.iter().zip(&g.table) {
        uf.union(a, b);
    }
    // Roots are minimal, so scanning upwards meets each root before its class members.
    let mut class = vec![usize::MAX; f.cod];
    let mut count = 0;
    let mut table = Vec::with_capacity(f.cod);
    for y in 0..f.cod {
        let r = uf.find(y);
        if class[r] == usize::MAX {
            class[r] = count;
            count += 1;
        }
        table.push(class[r]);
    }
    Ok((SkSet(count), SkMap { cod: count, table }))
}

/// Least element of each class of a surjection, indexed by class.
pub fn representatives(proj: &SkMap) -> Vec<usize> {
    let mut reps = vec![usize::MAX; proj.cod];
    for (y, &c) in proj.table.iter().enumerate() {
        if reps[c] == usize::MAX {
            reps[c] = y;
        }
    }
    reps
}

/// The unique `m` with `m ∘ proj = h`, found by evaluating `h` on the canonical representatives.
pub fn factor_through(proj: &SkMap, h: &SkMap) -> Option<SkMap> {
    if proj.table.len() != h.table.len() {
        return None;
    }
    let reps = representatives(proj);
    if reps.contains(&usize::MAX) {
        return None;
    }
    let m = SkMap {
        cod: h.cod,
        table: reps.iter().map(|&r| h.table[r]).collect(),
    };
    (m.after(proj).as_ref() == Some(h)).then_some(m)
}

/// Finite sets with the cartesian product as a strict monoidal structure,
/// acting on themselves by product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FinSets;

impl Category for FinSets {
    type Ob = SkSet;
    type Mor = SkMap;

    fn dom(&self, f: &SkMap) -> SkSet {
        f.dom()
    }
    fn cod(&self, f: &SkMap) -> SkSet {
        f.cod()
    }
    fn identity(&self, x: &SkSet) -> SkMap {
        SkMap::identity(x.0)
    }
    fn compose(&self, g: &SkMap, f: &SkMap) -> Option<SkMap> {
        g.after(f)
    }
}

impl Monoidal for FinSets {
    fn unit(&self) -> SkSet {
        SkSet(1)
    }
    fn tensor_ob(&self, a: &SkSet, b: &SkSet) -> SkSet {
        SkSet(a.0 * b.0)
    }
    fn tensor_mor(&self, f: &SkMap, g: &SkMap) -> SkMap {
        product_map(f, g)
    }
}

impl LeftModule for FinSets {
    type Base = FinSets;

    fn base(&self) -> &FinSets {
        self
    }
    fn act_ob(&self, m: &SkSet, b: &SkSet) -> SkSet {
        self.tensor_ob(m, b)
    }
    fn act_mor(&self, f: &SkMap, g: &SkMap) -> SkMap {
        product_map(f, g)
    }
}

impl Cocomplete for FinSets {
    fn coproduct(&self, parts: &[SkSet]) -> (SkSet, Vec<SkMap>) {
        let (total, offsets) = coproduct(parts, usize::MAX).expect("unbounded coproduct");
        let inj = (0..parts.len()).map(|k| injection(parts, &offsets, total, k)).collect();
        (total, inj)
    }

    fn copair(&self, apex: &SkSet, legs: &[SkMap]) -> SkMap {
        let mut table = Vec::new();
        for leg in legs {
            debug_assert_eq!(leg.cod, apex.0);
            table.extend_from_slice(&leg.table);
        }
        SkMap { cod: apex.0, table }
    }

    fn coequalizer(&self, f: &SkMap, g: &SkMap) -> (SkSet, SkMap) {
        coequalizer(f, g).expect("parallel pair")
    }

    fn descend(&self, proj: &SkMap, h: &SkMap) -> Option<SkMap> {
        factor_through(proj, h)
    }

    fn jointly_surjective(&self, legs: &[SkMap], apex: &SkSet) -> bool {
        let mut hit = vec![false; apex.0];
        for leg in legs {
            for &v in &leg.table {
                hit[v] = true;
            }
        }
        hit.into_iter().all(|b| b)
    }

    fn invert(&self, f: &SkMap) -> Option<SkMap> {
        f.inverse()
    }

    fn size(&self, x: &SkSet) -> usize {
        x.0
    }
}

/// Finite sets with disjoint union as the strict monoidal structure (unit `0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FinSetsSum;

impl Category for FinSetsSum {
    type Ob = SkSet;
    type Mor = SkMap;

    fn dom(&self, f: &SkMap) -> SkSet {
        f.dom()
    }
    fn cod(&self, f: &SkMap) -> SkSet {
        f.cod()
    }
    fn identity(&self, x: &SkSet) -> SkMap {
        SkMap::identity(x.0)
    }
    fn compose(&self, g: &SkMap, f: &SkMap) -> Option<SkMap> {
        g.after(f)
    }
}

impl Monoidal for FinSetsSum {
    fn unit(&self) -> SkSet {
        SkSet(0)
    }
    fn tensor_ob(&self, a: &SkSet, b: &SkSet) -> SkSet {
        SkSet(a.0 + b.0)
    }
    fn tensor_mor(&self, f: &SkMap, g: &SkMap) -> SkMap {
        sum_map(f, g)
    }
}

/// Every map `{0..n} → {0..m}` for `n, m ≤ max_card`, in lexicographic order of `(n, m, table)`.
pub fn all_maps(max_card: usize) -> Vec<SkMap> {
    let mut out = Vec::new();
    for n in 0..=max_card {
        for m in 0..=max_card {
            out.extend(maps_between(n, m));
        }
    }
    out
}

/// Every map `{0..n} → {0..m}` in lexicographic order of tables.
pub fn maps_between(n: usize, m: usize) -> Vec<SkMap> {
    if n > 0 && m == 0 {
        return Vec::new();
    }
    let count = m.pow(n as u32);
    (0..count)
        .map(|mut k| {
            let mut table = vec![0; n];
            for slot in table.iter_mut().rev() {
                *slot = k % m;
                k /= m;
            }
            SkMap { cod: m, table }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn map(cod: usize, t: &[usize]) -> SkMap {
        SkMap::new(cod, t.to_vec()).unwrap()
    }

    #[test]
    fn product_encoding() {
        assert_eq!(product(SkSet(2), SkSet(3), 100).unwrap(), SkSet(6));
        assert_eq!(pair(3, 1, 2), 5);
        for j in 0..4 {
            assert_eq!(pair(4, 0, j), j);
        }
        assert!(matches!(product(SkSet(1000), SkSet(1000), 10), Err(SetError::Overflow { .. })));
    }

    #[test]
    fn pairing_is_strictly_associative_on_cards_two() {
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    // (i,j) lives in a set of card 4; k in card 2; j,k pair in card 4.
                    assert_eq!(pair(2, pair(2, i, j), k), pair(4, i, pair(2, j, k)));
                }
            }
        }
    }

    #[test]
    fn coproduct_offsets() {
        let (total, off) = coproduct(&[SkSet(2), SkSet(3)], 100).unwrap();
        assert_eq!(total, SkSet(5));
        let inj = injection(&[SkSet(2), SkSet(3)], &off, total, 1);
        assert_eq!(inj.apply(0), 2);
        assert_eq!(coproduct(&[], 100).unwrap().0, SkSet(0));
        let parts = [SkSet(1); 3];
        let (t, off) = coproduct(&parts, 100).unwrap();
        for k in 0..3 {
            assert_eq!(injection(&parts, &off, t, k).table(), &[k]);
        }
    }

    #[test]
    fn coequalizer_examples() {
        let f = map(3, &[0, 2, 1]);
        let (q, p) = coequalizer(&f, &f).unwrap();
        assert_eq!(q, SkSet(3));
        assert_eq!(p, SkMap::identity(3));
        let (q, _) = coequalizer(&map(2, &[0]), &map(2, &[1])).unwrap();
        assert_eq!(q, SkSet(1));
        let (q, p) = coequalizer(&map(3, &[0, 1]), &map(3, &[1, 2])).unwrap();
        assert_eq!(q, SkSet(1));
        assert_eq!(p.table(), &[0, 0, 0]);
        assert_eq!(coequalizer(&map(3, &[0]), &map(2, &[0])), Err(SetError::ShapeMismatch));
    }

    #[test]
    fn classes_are_numbered_by_minimal_representative() {
        // 3∼4, 0∼2 in a set of 5: classes {0,2},{1},{3,4}
        let (q, p) = coequalizer(&map(5, &[4, 2]), &map(5, &[3, 0])).unwrap();
        assert_eq!(q, SkSet(3));
        assert_eq!(p.table(), &[0, 1, 0, 2, 2]);
        assert_eq!(representatives(&p), vec![0, 1, 3]);
    }

    #[test]
    fn coequalizer_universal_property_exhaustive() {
        for n in 0..=3 {
            for m in 0..=3 {
                let maps = maps_between(n, m);
                for f in &maps {
                    for g in &maps {
                        let (q, proj) = coequalizer(f, g).unwrap();
                        for t in 0..=3 {
                            for h in maps_between(m, t) {
                                let coequalizes = h.after(f) == h.after(g);
                                let factors: Vec<SkMap> = maps_between(q.0, t)
                                    .into_iter()
                                    .filter(|k| k.after(&proj).as_ref() == Some(&h))
                                    .collect();
                                assert_eq!(coequalizes, !factors.is_empty());
                                assert!(factors.len() <= 1);
                                assert_eq!(factor_through(&proj, &h), factors.into_iter().next());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn product_distributes_over_coproduct_in_the_right_argument() {
        // X × (Y ⊔ Z) and (X×Y) ⊔ (X×Z): the canonical bijection sends
        // pair(i, k) to the summand element, and is the identity when X = 1.
        for x in 0..=3 {
            for y in 0..=3 {
                for z in 0..=3 {
                    let yz = y + z;
                    let mut seen = vec![false; x * yz];
                    for i in 0..x {
                        for k in 0..yz {
                            let target = if k < y { pair(y, i, k) } else { x * y + pair(z, i, k - y) };
                            assert!(!seen[target]);
                            seen[target] = true;
                            if x == 1 {
                                assert_eq!(target, pair(yz, i, k));
                            }
                        }
                    }
                    assert!(seen.into_iter().all(|b| b));
                }
            }
        }
    }

    #[test]
    fn copair_and_descend_in_the_trait() {
        let s = FinSets;
        let (apex, inj) = s.coproduct(&[SkSet(2), SkSet(1)]);
        assert_eq!(apex, SkSet(3));
        let h = s.copair(&SkSet(2), &[map(2, &[1, 0]), map(2, &[1])]);
        assert_eq!(h.table(), &[1, 0, 1]);
        assert_eq!(s.then(&h, &inj[1]).table(), &[1]);
        assert!(s.jointly_surjective(&inj, &apex));
        assert!(!s.jointly_surjective(&inj[..1], &apex));
    }

    proptest! {
        #[test]
        fn product_maps_are_bifunctorial(
            a in 1usize..4, b in 1usize..4, c in 1usize..4,
            seed in any::<u64>()
        ) {
            let pick = |n: usize, m: usize, s: u64| -> SkMap {
                let all = maps_between(n, m);
                all[(s as usize) % all.len()].clone()
            };
            let f1 = pick(a, b, seed);
            let f2 = pick(b, c, seed >> 8);
            let g1 = pick(c, a, seed >> 16);
            let g2 = pick(a, b, seed >> 24);
            let lhs = product_map(&f2.after(&f1).unwrap(), &g2.after(&g1).unwrap());
            let rhs = product_map(&f2, &g2).after(&product_map(&f1, &g1)).unwrap();
            prop_assert_eq!(lhs, rhs);
            let three = product_map(&product_map(&f1, &g1), &f2);
            let three_r = product_map(&f1, &product_map(&g1, &f2));
            prop_assert_eq!(three, three_r);
        }

        #[test]
        fn coequalizer_is_deterministic_and_surjective(
            cod in 1usize..6,
            pairs in proptest::collection::vec((0usize..6, 0usize..6), 0..6)
        ) {
            let f = SkMap::new(cod, pairs.iter().map(|p| p.0 % cod).collect()).unwrap();
            let g = SkMap::new(cod, pairs.iter().map(|p| p.1 % cod).collect()).unwrap();
            let a = coequalizer(&f, &g).unwrap();
            let b = coequalizer(&f, &g).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert!(a.1.is_surjective());
            prop_assert_eq!(a.1.after(&f), a.1.after(&g));
        }
    }
}
