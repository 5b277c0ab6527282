//! Functors compatible with the base action: between tensored categories
//! (with structure isomorphisms `σ`), and from enriched to tensored categories
//! (with action maps `φ`). Includes exhaustive enumeration of the latter.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::category::{Category, Enriched, Finite, LeftModule, Monoidal};
use crate::fincat::{FinCat, FinFunctor};
use crate::tensored::LTensored;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MFunError {
    #[error("malformed functor data: {0}")]
    Shape(String),
    #[error("φ({x}, {y}) has the wrong endpoints")]
    TypeMismatch { x: String, y: String },
    #[error("composition square fails at ({x}, {y}, {z})")]
    CompatibilityViolation { x: String, y: String, z: String },
    #[error("unit does not act as the identity on the image of {0}")]
    UnitActionViolation(String),
    #[error("underlying functor is invalid: {0}")]
    FunctorViolation(String),
    #[error("σ({m}, {a}) is not a map f(m·a) → m·f(a)")]
    SigmaTypeMismatch { m: String, a: String },
    #[error("σ({m}, {a}) is not invertible")]
    SigmaNotInvertible { m: String, a: String },
    #[error("σ is not natural along ({k}, {s})")]
    NaturalityViolation { k: String, s: String },
    #[error("cocycle condition fails at ({m}, {n}, {a})")]
    CocycleViolation { m: String, n: String, a: String },
    #[error("component square fails at ({x}, {y})")]
    MorphismViolation { x: String, y: String },
    #[error("size bound exceeded: {what} is {size}, cap {cap}")]
    SizeBound { what: &'static str, size: u64, cap: u64 },
}

/// A functor from an enriched category into a tensored one: an object map and,
/// for every pair, `φ[x·n + y]: act(hom(x, y), f(x)) → f(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MFunET<O, F> {
    pub ob_map: Vec<O>,
    pub phi: Vec<F>,
}

impl<O, F> MFunET<O, F> {
    pub fn phi(&self, n: usize, x: usize, y: usize) -> &F {
        &self.phi[x * n + y]
    }
}

/// A morphism between two functors with common source and target: components `f(x) → g(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MFunMor<F> {
    pub components: Vec<F>,
}

/// A functor between tensored categories with structure maps `σ[m·n + a]: f(act(m, a)) → act(m, f(a))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MFunTT {
    pub functor: FinFunctor,
    pub sigma: Vec<usize>,
}

impl MFunTT {
    /// The identity functor with identity structure maps.
    pub fn identity(b: &LTensored) -> MFunTT {
        let c = b.carrier();
        let nb = b.base().object_count();
        let nc = c.object_count();
        MFunTT {
            functor: FinFunctor::identity(c),
            sigma: (0..nb * nc).map(|i| c.id(b.act_ob(&(i / nc), &(i % nc)))).collect(),
        }
    }
}

/// Does the composition square commute at `(x, y, z)`?
pub fn square_holds<A, B>(a: &A, b: &B, f: &MFunET<B::Ob, B::Mor>, x: usize, y: usize, z: usize) -> bool
where
    A: Enriched,
    B: LeftModule<Base = A::Base>,
{
    let m = a.base();
    let n = a.object_count();
    let fx = &f.ob_map[x];
    let via_comp = b.then(f.phi(n, x, z), &b.act_mor(&a.comp(x, y, z), &b.identity(fx)));
    let stepwise = b.then(f.phi(n, y, z), &b.act_mor(&m.identity(&a.hom(y, z)), f.phi(n, x, y)));
    via_comp == stepwise
}

/// Does `φ(x, x) ∘ act(unit(x), id)` equal the identity of `f(x)`?
pub fn unit_holds<A, B>(a: &A, b: &B, f: &MFunET<B::Ob, B::Mor>, x: usize) -> bool
where
    A: Enriched,
    B: LeftModule<Base = A::Base>,
{
    let n = a.object_count();
    let fx = &f.ob_map[x];
    b.then(f.phi(n, x, x), &b.act_mor(&a.unit(x), &b.identity(fx))) == b.identity(fx)
}

fn phi_typed<A, B>(a: &A, b: &B, f: &MFunET<B::Ob, B::Mor>, x: usize, y: usize) -> bool
where
    A: Enriched,
    B: LeftModule<Base = A::Base>,
{
    let n = a.object_count();
    b.is_hom(f.phi(n, x, y), &b.act_ob(&a.hom(x, y), &f.ob_map[x]), &f.ob_map[y])
}

/// All violations: typing (which ends the audit), then the first failing square, then the first unit failure.
pub fn audit_mfun_et<A, B>(a: &A, b: &B, f: &MFunET<B::Ob, B::Mor>) -> Vec<MFunError>
where
    A: Enriched,
    B: LeftModule<Base = A::Base>,
{
    let n = a.object_count();
    let names = a.object_names();
    if f.ob_map.len() != n || f.phi.len() != n * n {
        return vec![MFunError::Shape(format!("expected {n} objects and {} action maps", n * n))];
    }
    for x in 0..n {
        for y in 0..n {
            if !phi_typed(a, b, f, x, y) {
                return vec![MFunError::TypeMismatch {
                    x: names[x].clone(),
                    y: names[y].clone(),
                }];
            }
        }
    }
    let mut found = Vec::new();
    'sq: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !square_holds(a, b, f, x, y, z) {
                    found.push(MFunError::CompatibilityViolation {
                        x: names[x].clone(),
                        y: names[y].clone(),
                        z: names[z].clone(),
                    });
                    break 'sq;
                }
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| !unit_holds(a, b, f, x)) {
        found.push(MFunError::UnitActionViolation(names[x].clone()));
    }
    found
}

pub fn validate_mfun_et<A, B>(a: &A, b: &B, f: &MFunET<B::Ob, B::Mor>) -> Result<(), MFunError>
where
    A: Enriched,
    B: LeftModule<Base = A::Base>,
{
    match audit_mfun_et(a, b, f).into_iter().next() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// Checks that `c` is a morphism `f ⇒ g`: well-typed components and
/// `φ_g(x, y) ∘ act(id, c_x) = c_y ∘ φ_f(x, y)` for every pair.
pub fn check_mfun_mor<A, B>(
    a: &A,
    b: &B,
    f: &MFunET<B::Ob, B::Mor>,
    g: &MFunET<B::Ob, B::Mor>,
    c: &MFunMor<B::Mor>,
) -> Result<(), MFunError>
where
    A: Enriched,
    B: LeftModule<Base = A::Base>,
{
    let n = a.object_count();
    let names = a.object_names();
    if c.components.len() != n {
        return Err(MFunError::Shape("one component per object".into()));
    }
    for x in 0..n {
        if !b.is_hom(&c.components[x], &f.ob_map[x], &g.ob_map[x]) {
            return Err(MFunError::Shape(format!("component at {} has the wrong endpoints", names[x])));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !mor_square_holds(a, b, f, g, &c.components, x, y) {
                return Err(MFunError::MorphismViolation {
                    x: names[x].clone(),
                    y: names[y].clone(),
                });
            }
        }
    }
    Ok(())
}

fn mor_square_holds<A, B>(a: &A, b: &B, f: &MFunET<B::Ob, B::Mor>, g: &MFunET<B::Ob, B::Mor>, c: &[B::Mor], x: usize, y: usize) -> bool
where
    A: Enriched,
    B: LeftModule<Base = A::Base>,
{
    let n = a.object_count();
    let m = a.base();
    let left = b.then(g.phi(n, x, y), &b.act_mor(&m.identity(&a.hom(x, y)), &c[x]));
    let right = b.then(&c[y], f.phi(n, x, y));
    left == right
}

pub fn compose_mfun_mor<B: Category>(b: &B, second: &MFunMor<B::Mor>, first: &MFunMor<B::Mor>) -> MFunMor<B::Mor> {
    MFunMor {
        components: second.components.iter().zip(&first.components).map(|(g, f)| b.then(g, f)).collect(),
    }
}

pub fn identity_mfun_mor<B: Category>(b: &B, f: &[B::Ob]) -> MFunMor<B::Mor> {
    MFunMor {
        components: f.iter().map(|x| b.identity(x)).collect(),
    }
}

/// All violations of a functor between tensored categories: the functor itself,
/// typing of `σ` (which ends the audit), invertibility, naturality, cocycle.
pub fn audit_mfun_tt(source: &LTensored, target: &LTensored, t: &MFunTT) -> Vec<MFunError> {
    let (sc, tc) = (source.carrier(), target.carrier());
    let base = source.base();
    let bc = base.carrier();
    let (nb, nc) = (bc.object_count(), sc.object_count());
    if let Err(e) = t.functor.check(sc, tc) {
        return vec![MFunError::FunctorViolation(format!("{e}"))];
    }
    if t.sigma.len() != nb * nc || t.sigma.iter().any(|&s| s >= tc.morphism_count()) {
        return vec![MFunError::Shape("σ must have one target morphism per (m, a)".into())];
    }
    let f = &t.functor;
    let sigma = |m: usize, a: usize| t.sigma[m * nc + a];
    for m in 0..nb {
        for a in 0..nc {
            let want_dom = f.ob_map[source.act_ob(&m, &a)];
            let want_cod = target.act_ob(&m, &f.ob_map[a]);
            if !tc.is_hom(&sigma(m, a), &want_dom, &want_cod) {
                return vec![MFunError::SigmaTypeMismatch {
                    m: bc.object_name(m).into(),
                    a: sc.object_name(a).into(),
                }];
            }
        }
    }
    let mut found = Vec::new();
    'inv: for m in 0..nb {
        for a in 0..nc {
            if tc.inverse_of(sigma(m, a)).is_none() {
                found.push(MFunError::SigmaNotInvertible {
                    m: bc.object_name(m).into(),
                    a: sc.object_name(a).into(),
                });
                break 'inv;
            }
        }
    }
    'nat: for k in 0..bc.morphism_count() {
        for s in 0..sc.morphism_count() {
            let (m, m2) = (bc.source(k), bc.target(k));
            let (a, a2) = (sc.source(s), sc.target(s));
            let left = tc.comp(sigma(m2, a2), f.mor_map[source.act_mor(&k, &s)]);
            let right = tc.comp(target.act_mor(&k, &f.mor_map[s]), sigma(m, a));
            if left != right {
                found.push(MFunError::NaturalityViolation {
                    k: bc.morphism_name(k).into(),
                    s: sc.morphism_name(s).into(),
                });
                break 'nat;
            }
        }
    }
    'cocycle: for m in 0..nb {
        for n in 0..nb {
            for a in 0..nc {
                let whole = sigma(base.tensor_ob(&m, &n), a);
                let inner = target.act_mor(&bc.id(m), &sigma(n, a));
                let outer = sigma(m, source.act_ob(&n, &a));
                if tc.comp(inner, outer) != whole {
                    found.push(MFunError::CocycleViolation {
                        m: bc.object_name(m).into(),
                        n: bc.object_name(n).into(),
                        a: sc.object_name(a).into(),
                    });
                    break 'cocycle;
                }
            }
        }
    }
    found
}

pub fn validate_mfun_tt(source: &LTensored, target: &LTensored, t: &MFunTT) -> Result<(), MFunError> {
    match audit_mfun_tt(source, target, t).into_iter().next() {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

struct EtSearch<'a, A, B: Category> {
    a: &'a A,
    b: &'a B,
    targets: Vec<B::Ob>,
    /// triples to test once pair `p` is assigned
    checks: Vec<Vec<(usize, usize, usize)>>,
    enforce_unit: bool,
    nodes: u64,
    cap: u64,
}

impl<A, B> EtSearch<'_, A, B>
where
    A: Enriched,
    B: LeftModule<Base = A::Base> + Finite,
{
    fn tick(&mut self) -> Result<(), MFunError> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(MFunError::SizeBound {
                what: "functor search nodes",
                size: self.nodes,
                cap: self.cap,
            });
        }
        Ok(())
    }

    fn objects(&mut self, x: usize, f: &mut MFunET<B::Ob, B::Mor>, out: &mut Vec<MFunET<B::Ob, B::Mor>>) -> Result<(), MFunError> {
        let n = self.a.object_count();
        if x == n {
            return self.pairs(0, f, out);
        }
        for i in 0..self.targets.len() {
            self.tick()?;
            f.ob_map.push(self.targets[i].clone());
            self.objects(x + 1, f, out)?;
            f.ob_map.pop();
        }
        Ok(())
    }

    fn pairs(&mut self, p: usize, f: &mut MFunET<B::Ob, B::Mor>, out: &mut Vec<MFunET<B::Ob, B::Mor>>) -> Result<(), MFunError> {
        let n = self.a.object_count();
        if p == n * n {
            out.push(f.clone());
            return Ok(());
        }
        let (x, y) = (p / n, p % n);
        let src = self.b.act_ob(&self.a.hom(x, y), &f.ob_map[x]);
        for cand in self.b.hom_set(&src, &f.ob_map[y]) {
            self.tick()?;
            f.phi.push(cand);
            // phi is only partially filled; the checks for p touch assigned pairs only
            let ok = self.checks[p]
                .iter()
                .all(|&(u, v, w)| square_holds_partial(self.a, self.b, f, u, v, w))
                && (!self.enforce_unit || x != y || unit_holds_partial(self.a, self.b, f, x));
            if ok {
                self.pairs(p + 1, f, out)?;
            }
            f.phi.pop();
        }
        Ok(())
    }
}

fn square_holds_partial<A, B>(a: &A, b: &B, f: &MFunET<B::Ob, B::Mor>, x: usize, y: usize, z: usize) -> bool
where
    A: Enriched,
    B: LeftModule<Base = A::Base>,
{
    let n = a.object_count();
    let m = a.base();
    let phi = |u: usize, v: usize| &f.phi[u * n + v];
    let via_comp = b.then(phi(x, z), &b.act_mor(&a.comp(x, y, z), &b.identity(&f.ob_map[x])));
    let stepwise = b.then(phi(y, z), &b.act_mor(&m.identity(&a.hom(y, z)), phi(x, y)));
    via_comp == stepwise
}

fn unit_holds_partial<A, B>(a: &A, b: &B, f: &MFunET<B::Ob, B::Mor>, x: usize) -> bool
where
    A: Enriched,
    B: LeftModule<Base = A::Base>,
{
    let n = a.object_count();
    let fx = &f.ob_map[x];
    b.then(&f.phi[x * n + x], &b.act_mor(&a.unit(x), &b.identity(fx))) == b.identity(fx)
}

/// Every functor `A → B`, in lexicographic order of object map then action maps
/// (each in the declaration order of `B`). With `enforce_unit` false only the
/// composition squares are imposed.
pub fn enumerate_mfun_et<A, B>(a: &A, b: &B, enforce_unit: bool, limits: &Limits) -> Result<Vec<MFunET<B::Ob, B::Mor>>, MFunError>
where
    A: Enriched,
    B: LeftModule<Base = A::Base> + Finite,
{
    let n = a.object_count();
    let mut checks = vec![Vec::new(); n * n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let last = (x * n + y).max(y * n + z).max(x * n + z);
                checks[last].push((x, y, z));
            }
        }
    }
    let mut search = EtSearch {
        a,
        b,
        targets: b.objects(),
        checks,
        enforce_unit,
        nodes: 0,
        cap: limits.max_candidates,
    };
    let mut out = Vec::new();
    let mut f = MFunET {
        ob_map: Vec::with_capacity(n),
        phi: Vec::with_capacity(n * n),
    };
    search.objects(0, &mut f, &mut out)?;
    Ok(out)
}

/// Every morphism `f ⇒ g`, components in lexicographic order.
pub fn enumerate_mfun_mor<A, B>(
    a: &A,
    b: &B,
    f: &MFunET<B::Ob, B::Mor>,
    g: &MFunET<B::Ob, B::Mor>,
    limits: &Limits,
) -> Result<Vec<MFunMor<B::Mor>>, MFunError>
where
    A: Enriched,
    B: LeftModule<Base = A::Base> + Finite,
{
    let n = a.object_count();
    let mut out = Vec::new();
    let mut comps: Vec<B::Mor> = Vec::with_capacity(n);
    let mut nodes = 0u64;
    fn go<A, B>(
        a: &A,
        b: &B,
        f: &MFunET<B::Ob, B::Mor>,
        g: &MFunET<B::Ob, B::Mor>,
        comps: &mut Vec<B::Mor>,
        out: &mut Vec<MFunMor<B::Mor>>,
        nodes: &mut u64,
        cap: u64,
    ) -> Result<(), MFunError>
    where
        A: Enriched,
        B: LeftModule<Base = A::Base> + Finite,
    {
        let x = comps.len();
        if x == a.object_count() {
            out.push(MFunMor { components: comps.clone() });
            return Ok(());
        }
        for c in b.hom_set(&f.ob_map[x], &g.ob_map[x]) {
            *nodes += 1;
            if *nodes > cap {
                return Err(MFunError::SizeBound {
                    what: "morphism search nodes",
                    size: *nodes,
                    cap,
                });
            }
            comps.push(c);
            let ok = (0..=x).all(|y| mor_square_holds(a, b, f, g, comps, x, y) && mor_square_holds(a, b, f, g, comps, y, x));
            if ok {
                go(a, b, f, g, comps, out, nodes, cap)?;
            }
            comps.pop();
        }
        Ok(())
    }
    let _ = n;
    go(a, b, f, g, &mut comps, &mut out, &mut nodes, limits.max_candidates)?;
    Ok(out)
}

/// A finite functor category: the functors, every morphism between them, and the assembled [`FinCat`].
#[derive(Debug, Clone)]
pub struct MFunCategory<O, F> {
    pub functors: Vec<MFunET<O, F>>,
    /// `(source index, target index, morphism)`, ordered by source, target, then components.
    pub morphisms: Vec<(usize, usize, MFunMor<F>)>,
    pub category: FinCat,
}

/// Enumerates morphisms between all pairs and validates the result as a finite category.
pub fn mfun_category<A, B>(
    a: &A,
    b: &B,
    functors: Vec<MFunET<B::Ob, B::Mor>>,
    limits: &Limits,
) -> Result<MFunCategory<B::Ob, B::Mor>, crate::Error>
where
    A: Enriched,
    B: LeftModule<Base = A::Base> + Finite,
{
    let k = functors.len();
    let mut morphisms = Vec::new();
    let mut homs = vec![Vec::new(); k * k];
    for i in 0..k {
        for j in 0..k {
            for c in enumerate_mfun_mor(a, b, &functors[i], &functors[j], limits)? {
                homs[i * k + j].push(morphisms.len());
                morphisms.push((i, j, c));
            }
            if morphisms.len() > limits.max_morphisms {
                return Err(MFunError::SizeBound {
                    what: "functor category morphisms",
                    size: morphisms.len() as u64,
                    cap: limits.max_morphisms as u64,
                }
                .into());
            }
        }
    }
    let identity: Vec<usize> = (0..k)
        .map(|i| {
            let id = identity_mfun_mor(b, &functors[i].ob_map);
            homs[i * k + i]
                .iter()
                .copied()
                .find(|&h| morphisms[h].2 == id)
                .expect("identity is a morphism")
        })
        .collect();
    let category = FinCat::from_fn(
        (0..k).map(|i| format!("F{i}")).collect(),
        morphisms
            .iter()
            .enumerate()
            .map(|(h, (i, j, _))| (format!("F{i}->F{j}#{h}"), *i, *j))
            .collect(),
        identity,
        |g, f| {
            let (i, _, cf) = &morphisms[f];
            let (_, j, cg) = &morphisms[g];
            let c = compose_mfun_mor(b, cg, cf);
            homs[i * k + j].iter().copied().find(|&h| morphisms[h].2 == c)
        },
        limits,
    )?;
    Ok(MFunCategory {
        functors,
        morphisms,
        category,
    })
}

/// Outcome of imposing only the composition squares.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UnitStats {
    /// Candidates satisfying every composition square.
    pub square_only: usize,
    /// Of those, how many violate the unit law.
    pub unit_violations: usize,
    /// Objects at which the first few violating candidates fail, by candidate index.
    pub witnesses: Vec<(usize, String)>,
}

/// Counts functors satisfying the composition squares but not the unit law.
pub fn unit_automatism<A, B>(a: &A, b: &B, limits: &Limits) -> Result<UnitStats, MFunError>
where
    A: Enriched,
    B: LeftModule<Base = A::Base> + Finite,
{
    let all = enumerate_mfun_et(a, b, false, limits)?;
    let mut stats = UnitStats {
        square_only: all.len(),
        ..Default::default()
    };
    for (i, f) in all.iter().enumerate() {
        if let Some(x) = (0..a.object_count()).find(|&x| !unit_holds(a, b, f, x)) {
            stats.unit_violations += 1;
            if stats.witnesses.len() < 4 {
                stats.witnesses.push((i, a.object_names()[x].clone()));
            }
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enriched::MCat;
    use crate::instances;
    use crate::monoidal::MonStr;
    use alloc::sync::Arc;

    #[test]
    fn identity_tensored_functor_is_valid() {
        for b in [
            LTensored::regular(Arc::new(MonStr::boolean_and())),
            LTensored::regular(Arc::new(instances::s3_discrete())),
            instances::boolean_on_three_chain(),
        ] {
            assert!(audit_mfun_tt(&b, &b, &MFunTT::identity(&b)).is_empty());
        }
    }

    #[test]
    fn left_multiplication_in_s3_admits_no_identity_structure() {
        let s3 = Arc::new(instances::s3_discrete());
        let b = LTensored::regular(s3.clone());
        let t = |n: &str| instances::S3_NAMES.iter().position(|x| *x == n).unwrap();
        let ob_map: Vec<usize> = (0..6).map(|a| s3.tensor_ob(&t("(12)"), &a)).collect();
        let functor = FinFunctor {
            mor_map: ob_map.clone(),
            ob_map,
        };
        // σ(m, a) := identity of f(m·a)
        let sigma = (0..36).map(|i| functor.ob_map[s3.tensor_ob(&(i / 6), &(i % 6))]).collect();
        let found = audit_mfun_tt(&b, &b, &MFunTT { functor, sigma });
        // oracle: (12)·(13)·e and (13)·(12)·e differ, and (13) is the first m in table order where they do
        assert_ne!(s3.tensor_ob(&t("(12)"), &t("(13)")), s3.tensor_ob(&t("(13)"), &t("(12)")));
        assert_eq!(
            found,
            vec![MFunError::SigmaTypeMismatch {
                m: "(13)".into(),
                a: "e".into()
            }]
        );
    }

    #[test]
    fn meet_with_a_fixed_element_is_a_tensored_functor() {
        let base = Arc::new(MonStr::boolean_and());
        let b = LTensored::regular(base.clone());
        for m0 in 0..2usize {
            let ob_map: Vec<usize> = (0..2).map(|a: usize| a.min(m0)).collect();
            let c = b.carrier();
            let mor_map = (0..c.morphism_count())
                .map(|s| c.hom(ob_map[c.source(s)], ob_map[c.target(s)])[0])
                .collect();
            let sigma = (0..4).map(|i| c.id((i / 2).min(i % 2).min(m0))).collect();
            let t = MFunTT {
                functor: FinFunctor { ob_map, mor_map },
                sigma,
            };
            assert!(audit_mfun_tt(&b, &b, &t).is_empty());
        }
    }

    #[test]
    fn mutated_sigma_breaks_the_cocycle() {
        let b = LTensored::regular(Arc::new(instances::c2_one_object()));
        let mut t = instances::c2_identity_mfun_tt();
        assert!(audit_mfun_tt(&b, &b, &t).is_empty());
        t.sigma[0] = 1;
        let found = audit_mfun_tt(&b, &b, &t);
        assert!(found.contains(&MFunError::CocycleViolation {
            m: "*".into(),
            n: "*".into(),
            a: "*".into()
        }));
        // oracle: σ_{*⊗*} = g while act(id, σ) ∘ σ = g·g = e
        let m = instances::c2_one_object();
        assert_ne!(m.carrier().comp(1, 1), 1);
    }

    #[test]
    fn trivial_source_functors_are_the_objects() {
        let base = Arc::new(MonStr::boolean_and());
        let a = MCat::new(
            base.clone(),
            crate::enriched::RawMCat {
                objects: vec!["*".into()],
                hom: vec![1],
                unit: vec![base.carrier().id(1)],
                comp: vec![base.carrier().id(1)],
            },
        )
        .unwrap();
        let b = LTensored::regular(base);
        let all = enumerate_mfun_et(&a, &b, true, &Limits::default()).unwrap();
        assert_eq!(all.len(), 2);
        for f in &all {
            assert_eq!(f.phi[0], b.carrier().id(f.ob_map[0]));
        }
    }

    #[test]
    fn empty_source_has_one_functor() {
        let base = Arc::new(MonStr::boolean_and());
        let a = MCat::empty(base.clone());
        let b = LTensored::regular(base);
        let all = enumerate_mfun_et(&a, &b, true, &Limits::default()).unwrap();
        assert_eq!(all.len(), 1);
        let cat = mfun_category(&a, &b, all, &Limits::default()).unwrap();
        assert_eq!(cat.category.morphism_count(), 1);
    }

    #[test]
    fn s3_one_object_functors_are_discrete() {
        let a = instances::s3_one_object();
        let b = LTensored::regular(a.base_arc().clone());
        let all = enumerate_mfun_et(&a, &b, true, &Limits::default()).unwrap();
        assert_eq!(all.len(), 6);
        let cat = mfun_category(&a, &b, all, &Limits::default()).unwrap();
        assert_eq!(cat.category.morphism_count(), 6);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // oracle: every (ob_map, φ) in the full product of hom-sets, filtered by the audit
        for a in [instances::boolean_chain(), instances::c2_two_object_mcat()] {
            let b = LTensored::regular(a.base_arc().clone());
            let found = enumerate_mfun_et(&a, &b, true, &Limits::default()).unwrap();
            let n = a.object_count();
            let nb = b.carrier().object_count();
            let mut brute = Vec::new();
            for code in 0..nb.pow(n as u32) {
                let ob_map: Vec<usize> = (0..n).map(|i| code / nb.pow((n - 1 - i) as u32) % nb).collect();
                let mut partial = vec![Vec::new()];
                for p in 0..n * n {
                    let (x, y) = (p / n, p % n);
                    let src = b.act_ob(&a.hom(x, y), &ob_map[x]);
                    let mut next = Vec::new();
                    for prefix in &partial {
                        for &c in b.carrier().hom(src, ob_map[y]) {
                            let mut v: Vec<usize> = prefix.clone();
                            v.push(c);
                            next.push(v);
                        }
                    }
                    partial = next;
                }
                for phi in partial {
                    let f = MFunET {
                        ob_map: ob_map.clone(),
                        phi,
                    };
                    if audit_mfun_et(&a, &b, &f).is_empty() {
                        brute.push(f);
                    }
                }
            }
            assert_eq!(found, brute);
            let cat = mfun_category(&a, &b, found, &Limits::default()).unwrap();
            assert!(cat.category.object_count() > 0);
        }
    }

    #[test]
    fn unit_law_is_not_implied_by_the_squares() {
        // trivial base acting on the monoid {e, z} with z·z = z: φ = z satisfies every square
        let (a, b) = instances::idempotent_counterexample();
        let stats = unit_automatism(&a, &b, &Limits::default()).unwrap();
        assert_eq!(stats.square_only, 2);
        assert_eq!(stats.unit_violations, 1);
    }

    #[test]
    fn mutated_phi_breaks_a_square() {
        let a = instances::c2_two_object_mcat();
        let b = LTensored::regular(a.base_arc().clone());
        let all = enumerate_mfun_et(&a, &b, true, &Limits::default()).unwrap();
        let mut f = all[0].clone();
        assert!(audit_mfun_et(&a, &b, &f).is_empty());
        // φ(x, y) := g
        f.phi[1] = if f.phi[1] == 0 { 1 } else { 0 };
        let found = audit_mfun_et(&a, &b, &f);
        assert!(matches!(found[0], MFunError::CompatibilityViolation { .. }), "{found:?}");
    }

    #[test]
    fn size_cap_is_enforced() {
        let a = instances::boolean_chain();
        let b = LTensored::regular(a.base_arc().clone());
        let tight = Limits {
            max_candidates: 2,
            ..Limits::default()
        };
        assert!(matches!(enumerate_mfun_et(&a, &b, true, &tight), Err(MFunError::SizeBound { .. })));
    }
}
