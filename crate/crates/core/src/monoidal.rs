//! Strict monoidal structures on finite categories, the opposite monoidal
//! structure, and a generic law checker usable on probe sets of computable
//! bases such as [`crate::FinSets`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::category::{Category, Finite, Monoidal};
use crate::fincat::FinCat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidalError {
    #[error("malformed tensor tables: {0}")]
    Shape(String),
    #[error("tensor of `{f}` and `{g}` has the wrong endpoints")]
    TypeMismatch { f: String, g: String },
    #[error("strict unitality fails at {0}")]
    UnitViolation(String),
    #[error("bifunctoriality fails at {0}")]
    BifunctorialityViolation(String),
    #[error("strict associativity fails at {0}")]
    AssociativityViolation(String),
}

/// A strict monoidal structure on a finite category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonStr {
    carrier: FinCat,
    unit: usize,
    tensor_ob: Vec<usize>,
    tensor_mor: Vec<usize>,
}

impl MonStr {
    /// Validates the tables exhaustively. `tensor_ob[a·n + b] = a ⊗ b`, `tensor_mor[f·k + g] = f ⊗ g`.
    pub fn new(carrier: FinCat, unit: usize, tensor_ob: Vec<usize>, tensor_mor: Vec<usize>) -> Result<MonStr, MonoidalError> {
        let m = MonStr {
            carrier,
            unit,
            tensor_ob,
            tensor_mor,
        };
        match m.audit().into_iter().next() {
            Some(e) => Err(e),
            None => Ok(m),
        }
    }

    /// Every law violation found, at most one per law, in checking order.
    ///
    /// Shape and typing failures stop the audit since later laws would not be well-defined.
    pub fn audit(&self) -> Vec<MonoidalError> {
        let n = self.carrier.object_count();
        let k = self.carrier.morphism_count();
        if self.unit >= n {
            return vec![MonoidalError::Shape("unit is not an object".into())];
        }
        if self.tensor_ob.len() != n * n || self.tensor_ob.iter().any(|&x| x >= n) {
            return vec![MonoidalError::Shape("tensor_ob must be a total object table".into())];
        }
        if self.tensor_mor.len() != k * k || self.tensor_mor.iter().any(|&x| x >= k) {
            return vec![MonoidalError::Shape("tensor_mor must be a total morphism table".into())];
        }
        let c = &self.carrier;
        for f in 0..k {
            for g in 0..k {
                let h = self.tensor_mor[f * k + g];
                if c.source(h) != self.tensor_ob(&c.source(f), &c.source(g)) || c.target(h) != self.tensor_ob(&c.target(f), &c.target(g)) {
                    return vec![MonoidalError::TypeMismatch {
                        f: c.morphism_name(f).into(),
                        g: c.morphism_name(g).into(),
                    }];
                }
            }
        }
        let objects: Vec<usize> = (0..n).collect();
        let morphisms: Vec<usize> = (0..k).collect();
        check_monoidal_laws(
            self,
            &objects,
            &morphisms,
            |x| c.object_name(*x).to_string(),
            |f| c.morphism_name(*f).to_string(),
        )
    }

    pub fn carrier(&self) -> &FinCat {
        &self.carrier
    }

    pub fn unit_object(&self) -> usize {
        self.unit
    }

    pub fn tensor_ob_table(&self) -> &[usize] {
        &self.tensor_ob
    }

    pub fn tensor_mor_table(&self) -> &[usize] {
        &self.tensor_mor
    }

    pub fn object_count(&self) -> usize {
        self.carrier.object_count()
    }

    /// Boolean poset `0 ≤ 1` with meet as tensor and unit `1`.
    pub fn boolean_and() -> MonStr {
        let names = ["0".to_string(), "1".to_string()];
        let carrier = FinCat::preorder(&names, |i, j| i <= j).expect("boolean poset");
        MonStr::from_object_op(carrier, 1, |a, b| a.min(b)).expect("boolean meet")
    }

    /// The chain `0 < … < k−1` with a monotone associative operation and unit.
    pub fn chain(k: usize, unit: usize, op: impl Fn(usize, usize) -> usize) -> Result<MonStr, MonoidalError> {
        let names: Vec<String> = (0..k).map(|i| i.to_string()).collect();
        let carrier = FinCat::preorder(&names, |i, j| i <= j).map_err(|e| MonoidalError::Shape(e.to_string()))?;
        MonStr::from_object_op(carrier, unit, op)
    }

    /// Tensor on a thin category, where the morphism table is forced by the object table.
    pub fn from_object_op(carrier: FinCat, unit: usize, op: impl Fn(usize, usize) -> usize) -> Result<MonStr, MonoidalError> {
        let n = carrier.object_count();
        let k = carrier.morphism_count();
        let tensor_ob: Vec<usize> = (0..n * n).map(|i| op(i / n, i % n)).collect();
        let mut tensor_mor = vec![0; k * k];
        for f in 0..k {
            for g in 0..k {
                let d = tensor_ob[carrier.source(f) * n + carrier.source(g)];
                let t = tensor_ob[carrier.target(f) * n + carrier.target(g)];
                let hom = carrier.hom(d, t);
                if hom.len() != 1 {
                    return Err(MonoidalError::TypeMismatch {
                        f: carrier.morphism_name(f).into(),
                        g: carrier.morphism_name(g).into(),
                    });
                }
                tensor_mor[f * k + g] = hom[0];
            }
        }
        MonStr::new(carrier, unit, tensor_ob, tensor_mor)
    }

    /// The discrete category on a monoid, tensor = multiplication. Element 0 must be the unit.
    pub fn discrete_monoid(elements: &[String], mul: &[usize]) -> Result<MonStr, MonoidalError> {
        let n = elements.len();
        let carrier = FinCat::discrete(elements);
        // identities come in object order
        let tensor_mor = (0..n * n).map(|i| carrier.id(mul[i])).collect();
        MonStr::new(carrier, 0, mul.to_vec(), tensor_mor)
    }

    /// A one-object category on a commutative monoid, tensor on morphisms = multiplication.
    pub fn one_object(elements: &[String], mul: &[usize]) -> Result<MonStr, MonoidalError> {
        let carrier = FinCat::monoid("*", elements, mul).map_err(|e| MonoidalError::Shape(e.to_string()))?;
        MonStr::new(carrier, 0, vec![0], mul.to_vec())
    }

    /// Componentwise tensor on the product category.
    pub fn product(a: &MonStr, b: &MonStr) -> Result<MonStr, MonoidalError> {
        let carrier = FinCat::product(&a.carrier, &b.carrier).map_err(|e| MonoidalError::Shape(e.to_string()))?;
        let (na, nb) = (a.object_count(), b.object_count());
        let (ka, kb) = (a.carrier.morphism_count(), b.carrier.morphism_count());
        let n = na * nb;
        let k = ka * kb;
        let tensor_ob = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                a.tensor_ob[(x / nb) * na + y / nb] * nb + b.tensor_ob[(x % nb) * nb + y % nb]
            })
            .collect();
        let tensor_mor = (0..k * k)
            .map(|i| {
                let (f, g) = (i / k, i % k);
                a.tensor_mor[(f / kb) * ka + g / kb] * kb + b.tensor_mor[(f % kb) * kb + g % kb]
            })
            .collect();
        MonStr::new(carrier, a.unit * nb + b.unit, tensor_ob, tensor_mor)
    }

    /// `a ⊗ b` in the reversed order of factors (`M_op`).
    pub fn opposite(&self) -> MonStr {
        let n = self.object_count();
        let k = self.carrier.morphism_count();
        MonStr {
            carrier: self.carrier.clone(),
            unit: self.unit,
            tensor_ob: (0..n * n).map(|i| self.tensor_ob[(i % n) * n + i / n]).collect(),
            tensor_mor: (0..k * k).map(|i| self.tensor_mor[(i % k) * k + i / k]).collect(),
        }
    }

    pub fn is_symmetric_on_objects(&self) -> bool {
        let n = self.object_count();
        (0..n).all(|a| (0..n).all(|b| self.tensor_ob[a * n + b] == self.tensor_ob[b * n + a]))
    }
}

/// The opposite monoidal structure, revalidated.
pub fn opposite_monoidal(m: &MonStr) -> MonStr {
    let op = m.opposite();
    debug_assert!(op.audit().is_empty());
    op
}

/// Checks strict unitality, bifunctoriality and strict associativity on the given probes.
///
/// Returns the first violation of each law, in that order.
pub fn check_monoidal_laws<M: Monoidal>(
    m: &M,
    objects: &[M::Ob],
    morphisms: &[M::Mor],
    ob_name: impl Fn(&M::Ob) -> String,
    mor_name: impl Fn(&M::Mor) -> String,
) -> Vec<MonoidalError> {
    let mut found = Vec::new();
    let unit = m.unit();
    let id_unit = m.identity(&unit);
    let unit_fail = objects
        .iter()
        .find(|a| m.tensor_ob(&unit, a) != **a || m.tensor_ob(a, &unit) != **a)
        .map(&ob_name)
        .or_else(|| {
            morphisms
                .iter()
                .find(|f| m.tensor_mor(&id_unit, f) != **f || m.tensor_mor(f, &id_unit) != **f)
                .map(&mor_name)
        });
    if let Some(w) = unit_fail {
        found.push(MonoidalError::UnitViolation(w));
    }

    let bif = 'search: {
        for a in objects {
            for b in objects {
                if m.tensor_mor(&m.identity(a), &m.identity(b)) != m.identity(&m.tensor_ob(a, b)) {
                    break 'search Some(format!("identities of ({}, {})", ob_name(a), ob_name(b)));
                }
            }
        }
        let pairs = composable_pairs(m, morphisms);
        for (g, f) in &pairs {
            for (g2, f2) in &pairs {
                // (g ∘ f) ⊗ (g2 ∘ f2) = (g ⊗ g2) ∘ (f ⊗ f2)
                let lhs = m.tensor_mor(&m.then(g, f), &m.then(g2, f2));
                let rhs = m.compose(&m.tensor_mor(g, g2), &m.tensor_mor(f, f2));
                if rhs.as_ref() != Some(&lhs) {
                    break 'search Some(format!("({}∘{}) ⊗ ({}∘{})", mor_name(g), mor_name(f), mor_name(g2), mor_name(f2)));
                }
            }
        }
        None
    };
    if let Some(w) = bif {
        found.push(MonoidalError::BifunctorialityViolation(w));
    }

    let assoc = 'search: {
        for a in objects {
            for b in objects {
                for c in objects {
                    if m.tensor_ob(&m.tensor_ob(a, b), c) != m.tensor_ob(a, &m.tensor_ob(b, c)) {
                        break 'search Some(format!("objects ({}, {}, {})", ob_name(a), ob_name(b), ob_name(c)));
                    }
                }
            }
        }
        for f in morphisms {
            for g in morphisms {
                for h in morphisms {
                    if m.tensor_mor(&m.tensor_mor(f, g), h) != m.tensor_mor(f, &m.tensor_mor(g, h)) {
                        break 'search Some(format!("morphisms ({}, {}, {})", mor_name(f), mor_name(g), mor_name(h)));
                    }
                }
            }
        }
        None
    };
    if let Some(w) = assoc {
        found.push(MonoidalError::AssociativityViolation(w));
    }
    found
}

fn composable_pairs<C: Category>(c: &C, morphisms: &[C::Mor]) -> Vec<(C::Mor, C::Mor)> {
    let mut out = Vec::new();
    for g in morphisms {
        for f in morphisms {
            if c.cod(f) == c.dom(g) {
                out.push((g.clone(), f.clone()));
            }
        }
    }
    out
}

/// Probe objects and maps for a computable finite-set base: every set of card ≤ `max_card`
/// and every map between them.
pub fn finset_probes(max_card: usize) -> (Vec<crate::SkSet>, Vec<crate::SkMap>) {
    ((0..=max_card).map(crate::SkSet).collect(), crate::finset::all_maps(max_card))
}

pub fn describe<T: Debug>(x: &T) -> String {
    format!("{x:?}")
}

impl Category for MonStr {
    type Ob = usize;
    type Mor = usize;

    fn dom(&self, f: &usize) -> usize {
        self.carrier.source(*f)
    }
    fn cod(&self, f: &usize) -> usize {
        self.carrier.target(*f)
    }
    fn identity(&self, x: &usize) -> usize {
        self.carrier.id(*x)
    }
    fn compose(&self, g: &usize, f: &usize) -> Option<usize> {
        self.carrier.try_compose(*g, *f)
    }
}

impl Finite for MonStr {
    fn objects(&self) -> Vec<usize> {
        self.carrier.objects()
    }
    fn morphisms(&self) -> Vec<usize> {
        self.carrier.morphisms()
    }
    fn hom_set(&self, x: &usize, y: &usize) -> Vec<usize> {
        self.carrier.hom(*x, *y).to_vec()
    }
    fn inverse(&self, f: &usize) -> Option<usize> {
        self.carrier.inverse_of(*f)
    }
}

impl Monoidal for MonStr {
    fn unit(&self) -> usize {
        self.unit
    }
    fn tensor_ob(&self, a: &usize, b: &usize) -> usize {
        self.tensor_ob[a * self.carrier.object_count() + b]
    }
    fn tensor_mor(&self, f: &usize, g: &usize) -> usize {
        self.tensor_mor[f * self.carrier.morphism_count() + g]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::{FinSets, FinSetsSum};
    use crate::instances;

    #[test]
    fn boolean_meet_is_valid_and_commutative() {
        let b = MonStr::boolean_and();
        assert!(b.audit().is_empty());
        assert_eq!(b.opposite(), b);
        // oracle: exhaustive object triples of the meet table
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    assert_eq!(b.tensor_ob(&b.tensor_ob(&x, &y), &z), x.min(y).min(z));
                }
            }
        }
    }

    #[test]
    fn discrete_s3_is_valid_and_not_commutative() {
        let s3 = instances::s3_discrete();
        assert!(s3.audit().is_empty());
        assert!(!s3.is_symmetric_on_objects());
        let t = |n: &str| instances::S3_NAMES.iter().position(|x| *x == n).unwrap();
        assert_ne!(s3.tensor_ob(&t("(12)"), &t("(13)")), s3.tensor_ob(&t("(13)"), &t("(12)")));
        assert_eq!(s3.tensor_ob(&t("(12)"), &t("(13)")), t("(132)"));
    }

    #[test]
    fn opposite_transposes_the_cayley_table() {
        let s3 = instances::s3_discrete();
        let op = opposite_monoidal(&s3);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(op.tensor_ob(&a, &b), s3.tensor_ob(&b, &a));
            }
        }
        assert!(op.audit().is_empty());
        assert_eq!(op.opposite(), s3);
    }

    #[test]
    fn finset_bases_pass_on_probes() {
        let (obs, maps) = finset_probes(3);
        assert!(check_monoidal_laws(&FinSets, &obs, &maps, describe, describe).is_empty());
        assert!(check_monoidal_laws(&FinSetsSum, &obs, &maps, describe, describe).is_empty());
    }

    #[test]
    fn one_object_product_and_chain_instances() {
        let c2 = instances::c2_one_object();
        assert!(c2.audit().is_empty());
        let p = MonStr::product(&c2, &MonStr::boolean_and()).unwrap();
        assert_eq!((p.object_count(), p.carrier().morphism_count()), (2, 6));
        let trunc = MonStr::chain(3, 0, |a, b| (a + b).min(2)).unwrap();
        assert!(trunc.audit().is_empty());
        assert!(MonStr::chain(3, 2, |a, b| a.min(b)).is_ok());
        // max with unit 2 is not unital
        assert!(matches!(MonStr::chain(3, 2, |a, b| a.max(b)), Err(MonoidalError::UnitViolation(_))));
    }

    #[test]
    fn corrupted_tensor_cell_is_a_bifunctoriality_violation() {
        let c2 = instances::c2_one_object();
        let mut table = c2.tensor_mor_table().to_vec();
        // g ⊗ g = e in C2; corrupt to g
        table[3] = 1;
        let bad = MonStr {
            tensor_mor: table,
            ..c2.clone()
        };
        let found = bad.audit();
        assert!(matches!(found[0], MonoidalError::BifunctorialityViolation(_)));
        assert!(MonStr::new(bad.carrier.clone(), 0, vec![0], bad.tensor_mor.clone()).is_err());
    }
}
