//! Categories enriched over a strict monoidal base, and their opposites.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::category::{Category, Enriched, Monoidal};
use crate::fincat::FinCat;
use crate::finset::{FinSets, SkMap, SkSet};
use crate::monoidal::MonStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnrichedError {
    #[error("malformed enriched tables: {0}")]
    Shape(String),
    #[error("structure morphism {0} has the wrong endpoints")]
    TypeMismatch(String),
    #[error("enriched associativity fails at ({w}, {x}, {y}, {z})")]
    EnrichedAssociativityViolation { w: String, x: String, y: String, z: String },
    #[error("{side} unit law fails at ({x}, {y})")]
    EnrichedUnitViolation { x: String, y: String, side: &'static str },
}

/// Index-level enriched data over a finite base.
///
/// `hom[x·n + y]`, `unit[x]`, `comp[(x·n + y)·n + z]` are objects and morphisms of the base.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RawMCat {
    pub objects: Vec<String>,
    pub hom: Vec<usize>,
    pub unit: Vec<usize>,
    pub comp: Vec<usize>,
}

/// A validated category enriched over a finite strict monoidal base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MCat {
    base: Arc<MonStr>,
    objects: Vec<String>,
    hom: Vec<usize>,
    unit: Vec<usize>,
    comp: Vec<usize>,
}

impl MCat {
    pub fn new(base: Arc<MonStr>, raw: RawMCat) -> Result<MCat, EnrichedError> {
        let a = MCat {
            base,
            objects: raw.objects,
            hom: raw.hom,
            unit: raw.unit,
            comp: raw.comp,
        };
        match a.audit().into_iter().next() {
            Some(e) => Err(e),
            None => Ok(a),
        }
    }

    /// All violations found, at most one per law. Shape and typing failures end the audit.
    pub fn audit(&self) -> Vec<EnrichedError> {
        let n = self.objects.len();
        let m = &*self.base;
        let (nb, kb) = (m.object_count(), m.carrier().morphism_count());
        if self.hom.len() != n * n || self.hom.iter().any(|&h| h >= nb) {
            return vec![EnrichedError::Shape("hom must assign a base object to every pair".into())];
        }
        if self.unit.len() != n || self.comp.len() != n * n * n {
            return vec![EnrichedError::Shape("unit and comp tables must be total".into())];
        }
        if self.unit.iter().chain(&self.comp).any(|&f| f >= kb) {
            return vec![EnrichedError::Shape("structure morphisms must be base morphisms".into())];
        }
        for x in 0..n {
            if !m.is_hom(&self.unit[x], &m.unit(), &self.hom(x, x)) {
                return vec![EnrichedError::TypeMismatch(format!("unit({})", self.objects[x]))];
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let src = m.tensor_ob(&self.hom(y, z), &self.hom(x, y));
                    if !m.is_hom(&self.comp(x, y, z), &src, &self.hom(x, z)) {
                        return vec![EnrichedError::TypeMismatch(format!(
                            "comp({}, {}, {})",
                            self.objects[x], self.objects[y], self.objects[z]
                        ))];
                    }
                }
            }
        }
        check_enriched_laws(self)
    }

    pub fn base(&self) -> &MonStr {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<MonStr> {
        &self.base
    }

    pub fn raw(&self) -> RawMCat {
        RawMCat {
            objects: self.objects.clone(),
            hom: self.hom.clone(),
            unit: self.unit.clone(),
            comp: self.comp.clone(),
        }
    }

    /// The empty enriched category over `base`.
    pub fn empty(base: Arc<MonStr>) -> MCat {
        MCat {
            base,
            objects: Vec::new(),
            hom: Vec::new(),
            unit: Vec::new(),
            comp: Vec::new(),
        }
    }

    /// `hom_op(x, y) = hom(y, x)` over the opposite base; composition of `(x, y, z)` is that of `(z, y, x)`.
    pub fn opposite(&self) -> MCat {
        let n = self.objects.len();
        MCat {
            base: Arc::new(self.base.opposite()),
            objects: self.objects.clone(),
            hom: (0..n * n).map(|i| self.hom[(i % n) * n + i / n]).collect(),
            unit: self.unit.clone(),
            comp: (0..n * n * n)
                .map(|i| {
                    let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
                    self.comp[(z * n + y) * n + x]
                })
                .collect(),
        }
    }
}

pub fn opposite_mcat(a: &MCat) -> MCat {
    let op = a.opposite();
    debug_assert!(op.audit().is_empty());
    op
}

impl Enriched for MCat {
    type Base = MonStr;

    fn base(&self) -> &MonStr {
        &self.base
    }
    fn object_names(&self) -> &[String] {
        &self.objects
    }
    fn hom(&self, x: usize, y: usize) -> usize {
        self.hom[x * self.objects.len() + y]
    }
    fn unit(&self, x: usize) -> usize {
        self.unit[x]
    }
    fn comp(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.objects.len();
        self.comp[(x * n + y) * n + z]
    }
}

/// Associativity and unit laws of any enriched category whose structure maps are already well-typed.
pub fn check_enriched_laws<A: Enriched>(a: &A) -> Vec<EnrichedError> {
    let m = a.base();
    let n = a.object_count();
    let names = a.object_names();
    let mut found = Vec::new();
    'assoc: for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // hom(y,z) ⊗ hom(x,y) ⊗ hom(w,x) → hom(w,z)
                    let inner_first = m.then(&a.comp(w, y, z), &m.tensor_mor(&m.identity(&a.hom(y, z)), &a.comp(w, x, y)));
                    let outer_first = m.then(&a.comp(w, x, z), &m.tensor_mor(&a.comp(x, y, z), &m.identity(&a.hom(w, x))));
                    if inner_first != outer_first {
                        found.push(EnrichedError::EnrichedAssociativityViolation {
                            w: names[w].clone(),
                            x: names[x].clone(),
                            y: names[y].clone(),
                            z: names[z].clone(),
                        });
                        break 'assoc;
                    }
                }
            }
        }
    }
    'unit: for x in 0..n {
        for y in 0..n {
            let id = m.identity(&a.hom(x, y));
            let left = m.then(&a.comp(x, y, y), &m.tensor_mor(&a.unit(y), &id));
            let right = m.then(&a.comp(x, x, y), &m.tensor_mor(&id, &a.unit(x)));
            for (side, value) in [("left", left), ("right", right)] {
                if value != id {
                    found.push(EnrichedError::EnrichedUnitViolation {
                        x: names[x].clone(),
                        y: names[y].clone(),
                        side,
                    });
                    break 'unit;
                }
            }
        }
    }
    found
}

/// A finite category viewed as enriched in finite sets: `hom(x, y)` is the hom-set
/// size, elements indexed by declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetEnriched {
    cat: FinCat,
    base: FinSets,
    unit: Vec<SkMap>,
    comp: Vec<SkMap>,
}

impl SetEnriched {
    pub fn new(cat: FinCat) -> SetEnriched {
        let n = cat.object_count();
        let unit = (0..n)
            .map(|x| SkMap::element(cat.hom(x, x).len(), cat.hom_position(cat.id(x))))
            .collect();
        let mut comp = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (gs, fs) = (cat.hom(y, z), cat.hom(x, y));
                    let mut table = Vec::with_capacity(gs.len() * fs.len());
                    for &g in gs {
                        for &f in fs {
                            table.push(cat.hom_position(cat.comp(g, f)));
                        }
                    }
                    comp.push(SkMap::new(cat.hom(x, z).len(), table).expect("composite in hom(x, z)"));
                }
            }
        }
        SetEnriched {
            cat,
            base: FinSets,
            unit,
            comp,
        }
    }

    pub fn category(&self) -> &FinCat {
        &self.cat
    }
}

impl Enriched for SetEnriched {
    type Base = FinSets;

    fn base(&self) -> &FinSets {
        &self.base
    }
    fn object_names(&self) -> &[String] {
        self.cat.object_names()
    }
    fn hom(&self, x: usize, y: usize) -> SkSet {
        SkSet(self.cat.hom(x, y).len())
    }
    fn unit(&self, x: usize) -> SkMap {
        self.unit[x].clone()
    }
    fn comp(&self, x: usize, y: usize, z: usize) -> SkMap {
        let n = self.cat.object_count();
        self.comp[(x * n + y) * n + z].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn shipped_enriched_categories_validate() {
        for a in [
            instances::boolean_chain(),
            instances::s3_one_object(),
            instances::s3_two_object(),
            instances::c3_one_object(),
            instances::c2_one_object_mcat(),
            instances::c2_two_object_mcat(),
        ] {
            assert!(a.audit().is_empty());
            let op = opposite_mcat(&a);
            assert!(op.audit().is_empty());
            assert_eq!(op.opposite(), a);
        }
    }

    #[test]
    fn opposite_of_the_chain_is_the_reversed_chain() {
        let a = instances::boolean_chain();
        let op = a.opposite();
        // a ≤ b: hom(a,b)=1, hom(b,a)=0; reversed in the opposite
        assert_eq!((a.hom(0, 1), a.hom(1, 0)), (1, 0));
        assert_eq!((op.hom(0, 1), op.hom(1, 0)), (0, 1));
    }

    #[test]
    fn one_object_s3_category_is_self_opposite() {
        let a = instances::s3_one_object();
        let op = a.opposite();
        assert_eq!(op.raw(), a.raw());
    }

    #[test]
    fn changing_a_hom_object_breaks_typing() {
        let a = instances::s3_two_object();
        let mut raw = a.raw();
        // hom(y, x) := (13)
        raw.hom[2] = instances::S3_NAMES.iter().position(|x| *x == "(13)").unwrap();
        let err = MCat::new(a.base_arc().clone(), raw).unwrap_err();
        assert_eq!(err, EnrichedError::TypeMismatch("comp(x, y, x)".into()));
    }

    #[test]
    fn chain_laws_hold_in_every_triple() {
        // oracle: in a poset every diagram commutes, so validity reduces to typing,
        // i.e. hom(y,z) ∧ hom(x,y) ≤ hom(x,z) for all 8 triples.
        let a = instances::boolean_chain();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    assert!(a.hom(y, z).min(a.hom(x, y)) <= a.hom(x, z));
                }
            }
        }
        assert!(a.audit().is_empty());
    }

    #[test]
    fn empty_enriched_category_is_valid() {
        let a = MCat::empty(Arc::new(MonStr::boolean_and()));
        assert!(a.audit().is_empty());
    }

    #[test]
    fn mutated_composition_and_unit_are_caught() {
        let a = instances::c2_two_object_mcat();
        let mut raw = a.raw();
        // comp(x, y, x) := g
        raw.comp[2] = 1;
        let err = MCat::new(a.base_arc().clone(), raw).unwrap_err();
        assert!(matches!(err, EnrichedError::EnrichedAssociativityViolation { .. }));

        let a = instances::c2_one_object_mcat();
        let mut raw = a.raw();
        raw.comp[0] = 1;
        let err = MCat::new(a.base_arc().clone(), raw).unwrap_err();
        assert!(matches!(err, EnrichedError::EnrichedUnitViolation { .. }));
    }

    #[test]
    fn set_enriched_view_satisfies_the_laws() {
        let pp = instances::parallel_pair();
        let s = SetEnriched::new(pp);
        assert!(check_enriched_laws(&s).is_empty());
        assert_eq!(s.hom(0, 1), SkSet(2));
        assert_eq!(s.hom(1, 0), SkSet(0));
    }
}
