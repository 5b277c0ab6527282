//! Presheaves on an enriched category, stored as action maps
//! `f(y) ⊗ hom(x, y) → f(x)`, their tensoring by base objects, the Yoneda
//! embedding, and cell-by-cell checks of the Yoneda lemma and of full
//! faithfulness.
//!
//! Over a finite base the presheaf category is enumerated completely
//! ([`PresheafCat`]). Over finite sets it is handled through [`Presheaves`],
//! which computes colimits pointwise.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::category::{Category, Cocomplete, Enriched, Finite, LeftModule, Monoidal, Mor, Ob};
use crate::enriched::MCat;
use crate::fincat::FinCat;
use crate::finset::{self, FinSets, SkMap, SkSet};
use crate::mfunctor::MFunET;
use crate::tensored::{hom_object, is_universal, LTensored};
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresheafError {
    #[error("malformed presheaf data: {0}")]
    Shape(String),
    #[error("action ({x}, {y}) has the wrong endpoints")]
    TypeMismatch { x: String, y: String },
    #[error("action compatibility fails at ({x}, {y}, {z})")]
    CompatibilityViolation { x: String, y: String, z: String },
    #[error("unit does not act as the identity at {0}")]
    UnitActionViolation(String),
    #[error("components are not natural at ({x}, {y})")]
    NaturalityViolation { x: String, y: String },
    #[error("{0} is missing from the enumerated presheaf category")]
    NotEnumerated(String),
    #[error("size bound exceeded: {what} is {size}, cap {cap}")]
    SizeBound { what: &'static str, size: u64, cap: u64 },
}

/// Values `f(x)` and action maps `action[x·n + y]: f(y) ⊗ hom(x, y) → f(x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Presheaf<O, F> {
    pub values: Vec<O>,
    pub action: Vec<F>,
}

impl<O, F> Presheaf<O, F> {
    pub fn value(&self, x: usize) -> &O {
        &self.values[x]
    }

    pub fn action(&self, x: usize, y: usize) -> &F {
        &self.action[x * self.values.len() + y]
    }
}

/// A morphism of presheaves with components `f(x) → g(x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PresheafMor<O, F> {
    pub dom: Presheaf<O, F>,
    pub cod: Presheaf<O, F>,
    pub components: Vec<F>,
}

pub type PresheafOf<A> = Presheaf<Ob<<A as Enriched>::Base>, Mor<<A as Enriched>::Base>>;
pub type PresheafMorOf<A> = PresheafMor<Ob<<A as Enriched>::Base>, Mor<<A as Enriched>::Base>>;

fn compat_holds<A: Enriched>(a: &A, values: &[Ob<A::Base>], action: &[Mor<A::Base>], x: usize, y: usize, z: usize) -> bool {
    let m = a.base();
    let n = values.len();
    let act = |u: usize, v: usize| &action[u * n + v];
    let lhs = m.then(act(x, y), &m.tensor_mor(act(y, z), &m.identity(&a.hom(x, y))));
    let rhs = m.then(act(x, z), &m.tensor_mor(&m.identity(&values[z]), &a.comp(x, y, z)));
    lhs == rhs
}

fn unit_holds<A: Enriched>(a: &A, values: &[Ob<A::Base>], action: &[Mor<A::Base>], x: usize) -> bool {
    let m = a.base();
    let n = values.len();
    let id = m.identity(&values[x]);
    m.then(&action[x * n + x], &m.tensor_mor(&id, &a.unit(x))) == id
}

fn naturality_holds<A: Enriched>(a: &A, f: &PresheafOf<A>, g: &PresheafOf<A>, c: &[Mor<A::Base>], x: usize, y: usize) -> bool {
    let m = a.base();
    let lhs = m.then(g.action(x, y), &m.tensor_mor(&c[y], &m.identity(&a.hom(x, y))));
    let rhs = m.then(&c[x], f.action(x, y));
    lhs == rhs
}

/// Typing (which ends the audit), then the first compatibility and unit failures.
pub fn audit_presheaf<A: Enriched>(a: &A, f: &PresheafOf<A>) -> Vec<PresheafError> {
    let m = a.base();
    let n = a.object_count();
    let names = a.object_names();
    if f.values.len() != n || f.action.len() != n * n {
        return vec![PresheafError::Shape(format!("expected {n} values and {} actions", n * n))];
    }
    for x in 0..n {
        for y in 0..n {
            let src = m.tensor_ob(f.value(y), &a.hom(x, y));
            if !m.is_hom(f.action(x, y), &src, f.value(x)) {
                return vec![PresheafError::TypeMismatch {
                    x: names[x].clone(),
                    y: names[y].clone(),
                }];
            }
        }
    }
    let mut found = Vec::new();
    'compat: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !compat_holds(a, &f.values, &f.action, x, y, z) {
                    found.push(PresheafError::CompatibilityViolation {
                        x: names[x].clone(),
                        y: names[y].clone(),
                        z: names[z].clone(),
                    });
                    break 'compat;
                }
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| !unit_holds(a, &f.values, &f.action, x)) {
        found.push(PresheafError::UnitActionViolation(names[x].clone()));
    }
    found
}

/// Typing of the components and naturality for every pair.
pub fn check_presheaf_mor<A: Enriched>(a: &A, alpha: &PresheafMorOf<A>) -> Result<(), PresheafError> {
    let m = a.base();
    let n = a.object_count();
    let names = a.object_names();
    if alpha.components.len() != n {
        return Err(PresheafError::Shape("one component per object".into()));
    }
    for x in 0..n {
        if !m.is_hom(&alpha.components[x], alpha.dom.value(x), alpha.cod.value(x)) {
            return Err(PresheafError::Shape(format!("component at {} has the wrong endpoints", names[x])));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !naturality_holds(a, &alpha.dom, &alpha.cod, &alpha.components, x, y) {
                return Err(PresheafError::NaturalityViolation {
                    x: names[x].clone(),
                    y: names[y].clone(),
                });
            }
        }
    }
    Ok(())
}

/// `m ⊗ f`: values `m ⊗ f(x)`, actions `id_m ⊗ action`.
pub fn tensor_presheaf<M: Monoidal>(base: &M, m: &M::Ob, f: &Presheaf<M::Ob, M::Mor>) -> Presheaf<M::Ob, M::Mor> {
    let id = base.identity(m);
    Presheaf {
        values: f.values.iter().map(|v| base.tensor_ob(m, v)).collect(),
        action: f.action.iter().map(|h| base.tensor_mor(&id, h)).collect(),
    }
}

/// `g ⊗ α` for a base morphism `g: m → m'`: components `g ⊗ α_x`.
pub fn tensor_presheaf_mor<M: Monoidal>(base: &M, g: &M::Mor, alpha: &PresheafMor<M::Ob, M::Mor>) -> PresheafMor<M::Ob, M::Mor> {
    PresheafMor {
        dom: tensor_presheaf(base, &base.dom(g), &alpha.dom),
        cod: tensor_presheaf(base, &base.cod(g), &alpha.cod),
        components: alpha.components.iter().map(|c| base.tensor_mor(g, c)).collect(),
    }
}

/// `Y(z)`: values `hom(−, z)`, actions given by composition.
pub fn representable<A: Enriched>(a: &A, z: usize) -> PresheafOf<A> {
    let n = a.object_count();
    Presheaf {
        values: (0..n).map(|x| a.hom(x, z)).collect(),
        action: (0..n * n).map(|i| a.comp(i / n, i % n, z)).collect(),
    }
}

/// The structure map `hom(x, y) ⊗ Y(x) → Y(y)`, with components `comp(w, x, y)`.
pub fn yoneda_structure<A: Enriched>(a: &A, x: usize, y: usize) -> PresheafMorOf<A> {
    let n = a.object_count();
    PresheafMor {
        dom: tensor_presheaf(a.base(), &a.hom(x, y), &representable(a, x)),
        cod: representable(a, y),
        components: (0..n).map(|w| a.comp(w, x, y)).collect(),
    }
}

/// The Yoneda embedding as a functor into [`Presheaves`].
pub fn yoneda<A: Enriched>(a: &A) -> MFunET<PresheafOf<A>, PresheafMorOf<A>> {
    let n = a.object_count();
    MFunET {
        ob_map: (0..n).map(|z| representable(a, z)).collect(),
        phi: (0..n * n).map(|i| yoneda_structure(a, i / n, i % n)).collect(),
    }
}

/// The presheaf category of an enriched category, as a tensored category over its base.
pub struct Presheaves<'a, A> {
    a: &'a A,
}

impl<'a, A: Enriched> Presheaves<'a, A> {
    pub fn new(a: &'a A) -> Self {
        Presheaves { a }
    }

    pub fn source(&self) -> &A {
        self.a
    }
}

impl<A: Enriched> Category for Presheaves<'_, A> {
    type Ob = PresheafOf<A>;
    type Mor = PresheafMorOf<A>;

    fn dom(&self, f: &Self::Mor) -> Self::Ob {
        f.dom.clone()
    }
    fn cod(&self, f: &Self::Mor) -> Self::Ob {
        f.cod.clone()
    }
    fn identity(&self, x: &Self::Ob) -> Self::Mor {
        let m = self.a.base();
        PresheafMor {
            dom: x.clone(),
            cod: x.clone(),
            components: x.values.iter().map(|v| m.identity(v)).collect(),
        }
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Option<Self::Mor> {
        if f.cod != g.dom {
            return None;
        }
        let m = self.a.base();
        let components = g
            .components
            .iter()
            .zip(&f.components)
            .map(|(gc, fc)| m.compose(gc, fc))
            .collect::<Option<Vec<_>>>()?;
        Some(PresheafMor {
            dom: f.dom.clone(),
            cod: g.cod.clone(),
            components,
        })
    }
}

impl<A: Enriched> LeftModule for Presheaves<'_, A> {
    type Base = A::Base;

    fn base(&self) -> &A::Base {
        self.a.base()
    }
    fn act_ob(&self, m: &Ob<A::Base>, b: &Self::Ob) -> Self::Ob {
        tensor_presheaf(self.a.base(), m, b)
    }
    fn act_mor(&self, f: &Mor<A::Base>, g: &Self::Mor) -> Self::Mor {
        tensor_presheaf_mor(self.a.base(), f, g)
    }
}

/// Pointwise colimits of finite-set-valued presheaves.
impl<A: Enriched<Base = FinSets>> Cocomplete for Presheaves<'_, A> {
    fn coproduct(&self, parts: &[Self::Ob]) -> (Self::Ob, Vec<Self::Mor>) {
        let n = self.a.object_count();
        let mut values = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n);
        for x in 0..n {
            let cards: Vec<SkSet> = parts.iter().map(|p| p.values[x]).collect();
            let (total, off) = finset::coproduct(&cards, usize::MAX).expect("unbounded coproduct");
            values.push(total);
            offsets.push(off);
        }
        let mut action = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let h = self.a.hom(x, y).0;
                let mut table = Vec::with_capacity(values[y].0 * h);
                for (k, p) in parts.iter().enumerate() {
                    let act = p.action(x, y);
                    for i in 0..p.values[y].0 {
                        for j in 0..h {
                            table.push(offsets[x][k] + act.apply(finset::pair(h, i, j)));
                        }
                    }
                }
                action.push(SkMap::new(values[x].0, table).expect("coproduct action"));
            }
        }
        let apex = Presheaf { values, action };
        let injections = parts
            .iter()
            .enumerate()
            .map(|(k, p)| PresheafMor {
                dom: p.clone(),
                cod: apex.clone(),
                components: (0..n)
                    .map(|x| {
                        let table = (0..p.values[x].0).map(|i| offsets[x][k] + i).collect();
                        SkMap::new(apex.values[x].0, table).expect("injection")
                    })
                    .collect(),
            })
            .collect();
        (apex, injections)
    }

    fn copair(&self, apex: &Self::Ob, legs: &[Self::Mor]) -> Self::Mor {
        let doms: Vec<Self::Ob> = legs.iter().map(|l| l.dom.clone()).collect();
        let (sum, _) = self.coproduct(&doms);
        let n = self.a.object_count();
        PresheafMor {
            dom: sum,
            cod: apex.clone(),
            components: (0..n)
                .map(|x| {
                    let parts: Vec<SkMap> = legs.iter().map(|l| l.components[x].clone()).collect();
                    FinSets.copair(&apex.values[x], &parts)
                })
                .collect(),
        }
    }

    fn coequalizer(&self, f: &Self::Mor, g: &Self::Mor) -> (Self::Ob, Self::Mor) {
        let n = self.a.object_count();
        let mut values = Vec::with_capacity(n);
        let mut projs = Vec::with_capacity(n);
        for x in 0..n {
            let (q, p) = FinSets.coequalizer(&f.components[x], &g.components[x]);
            values.push(q);
            projs.push(p);
        }
        let base = &f.cod;
        let mut action = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let h = self.a.hom(x, y).0;
                let reps = finset::representatives(&projs[y]);
                let mut table = Vec::with_capacity(values[y].0 * h);
                for &r in &reps {
                    for j in 0..h {
                        table.push(projs[x].apply(base.action(x, y).apply(finset::pair(h, r, j))));
                    }
                }
                action.push(SkMap::new(values[x].0, table).expect("quotient action"));
            }
        }
        let apex = Presheaf { values, action };
        let proj = PresheafMor {
            dom: base.clone(),
            cod: apex.clone(),
            components: projs,
        };
        (apex, proj)
    }

    fn descend(&self, proj: &Self::Mor, h: &Self::Mor) -> Option<Self::Mor> {
        let components = proj
            .components
            .iter()
            .zip(&h.components)
            .map(|(p, c)| finset::factor_through(p, c))
            .collect::<Option<Vec<_>>>()?;
        Some(PresheafMor {
            dom: proj.cod.clone(),
            cod: h.cod.clone(),
            components,
        })
    }

    fn jointly_surjective(&self, legs: &[Self::Mor], apex: &Self::Ob) -> bool {
        (0..self.a.object_count()).all(|x| {
            let parts: Vec<SkMap> = legs.iter().map(|l| l.components[x].clone()).collect();
            FinSets.jointly_surjective(&parts, &apex.values[x])
        })
    }

    fn invert(&self, f: &Self::Mor) -> Option<Self::Mor> {
        let components = f.components.iter().map(|c| c.inverse()).collect::<Option<Vec<_>>>()?;
        Some(PresheafMor {
            dom: f.cod.clone(),
            cod: f.dom.clone(),
            components,
        })
    }

    fn size(&self, x: &Self::Ob) -> usize {
        x.values.iter().map(|v| v.0).sum()
    }
}

struct Budget {
    nodes: u64,
    cap: u64,
    what: &'static str,
}

impl Budget {
    fn tick(&mut self) -> Result<(), PresheafError> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(PresheafError::SizeBound {
                what: self.what,
                size: self.nodes,
                cap: self.cap,
            });
        }
        Ok(())
    }
}

/// Every presheaf on `a` over a finite base, in lexicographic order of values then actions.
/// With `enforce_unit` false only compatibility is imposed.
pub fn enumerate_presheaf_objects<A>(a: &A, enforce_unit: bool, limits: &Limits) -> Result<Vec<PresheafOf<A>>, PresheafError>
where
    A: Enriched,
    A::Base: Finite,
{
    let n = a.object_count();
    let mut checks = vec![Vec::new(); n * n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                checks[(x * n + y).max(y * n + z).max(x * n + z)].push((x, y, z));
            }
        }
    }
    let objects = a.base().objects();
    let mut budget = Budget {
        nodes: 0,
        cap: limits.max_candidates,
        what: "presheaf search nodes",
    };
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(n);
    let mut action = Vec::with_capacity(n * n);

    #[allow(clippy::too_many_arguments)]
    fn actions<A: Enriched>(
        a: &A,
        checks: &[Vec<(usize, usize, usize)>],
        enforce_unit: bool,
        values: &[Ob<A::Base>],
        action: &mut Vec<Mor<A::Base>>,
        budget: &mut Budget,
        out: &mut Vec<PresheafOf<A>>,
    ) -> Result<(), PresheafError>
    where
        A::Base: Finite,
    {
        let n = values.len();
        let p = action.len();
        if p == n * n {
            out.push(Presheaf {
                values: values.to_vec(),
                action: action.clone(),
            });
            return Ok(());
        }
        let (x, y) = (p / n, p % n);
        let m = a.base();
        let src = m.tensor_ob(&values[y], &a.hom(x, y));
        for cand in m.hom_set(&src, &values[x]) {
            budget.tick()?;
            action.push(cand);
            let ok = checks[p].iter().all(|&(u, v, w)| compat_holds(a, values, action, u, v, w))
                && (!enforce_unit || x != y || unit_holds(a, values, action, x));
            if ok {
                actions(a, checks, enforce_unit, values, action, budget, out)?;
            }
            action.pop();
        }
        Ok(())
    }

    fn assign<A: Enriched>(
        a: &A,
        objects: &[Ob<A::Base>],
        checks: &[Vec<(usize, usize, usize)>],
        enforce_unit: bool,
        values: &mut Vec<Ob<A::Base>>,
        action: &mut Vec<Mor<A::Base>>,
        budget: &mut Budget,
        out: &mut Vec<PresheafOf<A>>,
    ) -> Result<(), PresheafError>
    where
        A::Base: Finite,
    {
        if values.len() == a.object_count() {
            return actions(a, checks, enforce_unit, values, action, budget, out);
        }
        for o in objects {
            budget.tick()?;
            values.push(o.clone());
            assign(a, objects, checks, enforce_unit, values, action, budget, out)?;
            values.pop();
        }
        Ok(())
    }

    assign(a, &objects, &checks, enforce_unit, &mut values, &mut action, &mut budget, &mut out)?;
    Ok(out)
}

/// Every morphism `f → g`, components in lexicographic order.
pub fn enumerate_presheaf_mor<A>(
    a: &A,
    f: &PresheafOf<A>,
    g: &PresheafOf<A>,
    limits: &Limits,
) -> Result<Vec<Vec<Mor<A::Base>>>, PresheafError>
where
    A: Enriched,
    A::Base: Finite,
{
    let mut budget = Budget {
        nodes: 0,
        cap: limits.max_candidates,
        what: "presheaf morphism search nodes",
    };
    let mut out = Vec::new();
    let mut comps = Vec::with_capacity(a.object_count());

    fn go<A: Enriched>(
        a: &A,
        f: &PresheafOf<A>,
        g: &PresheafOf<A>,
        comps: &mut Vec<Mor<A::Base>>,
        budget: &mut Budget,
        out: &mut Vec<Vec<Mor<A::Base>>>,
    ) -> Result<(), PresheafError>
    where
        A::Base: Finite,
    {
        let x = comps.len();
        if x == a.object_count() {
            out.push(comps.clone());
            return Ok(());
        }
        for c in a.base().hom_set(f.value(x), g.value(x)) {
            budget.tick()?;
            comps.push(c);
            let ok = (0..=x).all(|y| naturality_holds(a, f, g, comps, x, y) && naturality_holds(a, f, g, comps, y, x));
            if ok {
                go(a, f, g, comps, budget, out)?;
            }
            comps.pop();
        }
        Ok(())
    }

    go(a, f, g, &mut comps, &mut budget, &mut out)?;
    Ok(out)
}

/// The enumerated presheaf category of an enriched category over a finite base.
#[derive(Debug, Clone)]
pub struct PresheafCat {
    pub presheaves: Vec<Presheaf<usize, usize>>,
    /// `(source index, target index, components)`, in the morphism order of `category`.
    pub morphisms: Vec<(usize, usize, Vec<usize>)>,
    pub category: FinCat,
    /// The tensoring `m ⊗ f`, as a validated module over the base.
    pub module: LTensored,
    index: BTreeMap<Presheaf<usize, usize>, usize>,
}

impl PresheafCat {
    pub fn index_of(&self, p: &Presheaf<usize, usize>) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn morphism_index(&self, i: usize, j: usize, components: &[usize]) -> Option<usize> {
        self.category.hom(i, j).iter().copied().find(|&h| self.morphisms[h].2 == components)
    }

    pub fn len(&self) -> usize {
        self.presheaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.presheaves.is_empty()
    }

    /// The Yoneda embedding as a functor into the enumerated module.
    pub fn yoneda(&self, a: &MCat) -> Result<MFunET<usize, usize>, PresheafError> {
        let n = a.object_count();
        let mut ob_map = Vec::with_capacity(n);
        for z in 0..n {
            let y = representable(a, z);
            ob_map.push(
                self.index_of(&y)
                    .ok_or_else(|| PresheafError::NotEnumerated(format!("Y({})", a.object_names()[z])))?,
            );
        }
        let mut phi = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let psi = yoneda_structure(a, x, y);
                let dom = self.module.act_ob(&a.hom(x, y), &ob_map[x]);
                let h = self.morphism_index(dom, ob_map[y], &psi.components).ok_or_else(|| {
                    PresheafError::NotEnumerated(format!("structure map ({}, {})", a.object_names()[x], a.object_names()[y]))
                })?;
                phi.push(h);
            }
        }
        Ok(MFunET { ob_map, phi })
    }
}

/// Enumerates every presheaf and morphism, and assembles the category and its tensoring.
pub fn enumerate_presheaves(a: &MCat, limits: &Limits) -> Result<PresheafCat, crate::Error> {
    let presheaves = enumerate_presheaf_objects(a, true, limits)?;
    let k = presheaves.len();
    if k > limits.max_objects.max(1) * 64 {
        return Err(PresheafError::SizeBound {
            what: "presheaf count",
            size: k as u64,
            cap: (limits.max_objects.max(1) * 64) as u64,
        }
        .into());
    }
    let index: BTreeMap<_, _> = presheaves.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut morphisms = Vec::new();
    let mut homs = vec![Vec::new(); k * k];
    for i in 0..k {
        for j in 0..k {
            for c in enumerate_presheaf_mor(a, &presheaves[i], &presheaves[j], limits)? {
                homs[i * k + j].push(morphisms.len());
                morphisms.push((i, j, c));
            }
            if morphisms.len() > limits.max_morphisms {
                return Err(PresheafError::SizeBound {
                    what: "presheaf morphism count",
                    size: morphisms.len() as u64,
                    cap: limits.max_morphisms as u64,
                }
                .into());
            }
        }
    }
    let m = a.base();
    let mc = m.carrier();
    let find = |i: usize, j: usize, c: &[usize]| homs[i * k + j].iter().copied().find(|&h| morphisms[h].2 == c);
    let identity = (0..k)
        .map(|i| {
            let id: Vec<usize> = presheaves[i].values.iter().map(|&v| mc.id(v)).collect();
            find(i, i, &id).expect("identity is natural")
        })
        .collect();
    let category = FinCat::from_fn(
        (0..k).map(|i| format!("P{i}")).collect(),
        morphisms
            .iter()
            .enumerate()
            .map(|(h, (i, j, _))| (format!("P{i}->P{j}#{h}"), *i, *j))
            .collect(),
        identity,
        |g, f| {
            let (i, _, cf) = &morphisms[f];
            let (_, j, cg) = &morphisms[g];
            let c: Vec<usize> = cg.iter().zip(cf).map(|(&x, &y)| mc.comp(x, y)).collect();
            find(*i, *j, &c)
        },
        limits,
    )?;

    let (nb, kb) = (m.object_count(), mc.morphism_count());
    let kp = morphisms.len();
    let mut act_ob = Vec::with_capacity(nb * k);
    for mo in 0..nb {
        for p in &presheaves {
            let t = tensor_presheaf(m, &mo, p);
            act_ob.push(
                *index
                    .get(&t)
                    .ok_or_else(|| PresheafError::NotEnumerated(format!("tensor of {} with a presheaf", mc.object_name(mo))))?,
            );
        }
    }
    let mut act_mor = Vec::with_capacity(kb * kp);
    for g in 0..kb {
        for (i, j, c) in &morphisms {
            let ti = act_ob[mc.source(g) * k + i];
            let tj = act_ob[mc.target(g) * k + j];
            let comps: Vec<usize> = c.iter().map(|&cx| m.tensor_mor(&g, &cx)).collect();
            act_mor.push(
                find(ti, tj, &comps)
                    .ok_or_else(|| PresheafError::NotEnumerated(format!("tensor of {} with a morphism", mc.morphism_name(g))))?,
            );
        }
    }
    let module = LTensored::new(a.base_arc().clone(), category.clone(), act_ob, act_mor)?;
    Ok(PresheafCat {
        presheaves,
        morphisms,
        category,
        module,
        index,
    })
}

/// Presheaf on `a` to functor `a^op → base acting on itself through the opposite tensor`.
pub fn presheaf_to_op_functor<O: Clone, F: Clone>(p: &Presheaf<O, F>) -> MFunET<O, F> {
    let n = p.values.len();
    MFunET {
        ob_map: p.values.clone(),
        phi: (0..n * n).map(|i| p.action(i % n, i / n).clone()).collect(),
    }
}

pub fn op_functor_to_presheaf<O: Clone, F: Clone>(f: &MFunET<O, F>) -> Presheaf<O, F> {
    let n = f.ob_map.len();
    Presheaf {
        values: f.ob_map.clone(),
        action: (0..n * n).map(|i| f.phi(n, i % n, i / n).clone()).collect(),
    }
}

/// Cell counts and failures of a mechanical check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub cells: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every presheaf `F`, object `x` and base object `m`: the map
/// `a ↦ (F.action(w, x) ∘ (a ⊗ id))_w` from `Hom(m, F(x))` to `Hom(m ⊗ Y(x), F)`
/// is a bijection, inverse to `α ↦ α_x ∘ (id_m ⊗ unit(x))`.
pub fn check_yoneda_lemma<A>(a: &A, presheaves: &[PresheafOf<A>], limits: &Limits) -> Result<CheckReport, PresheafError>
where
    A: Enriched,
    A::Base: Finite,
{
    let m = a.base();
    let n = a.object_count();
    let names = a.object_names();
    let mut report = CheckReport::default();
    for (fi, f) in presheaves.iter().enumerate() {
        for x in 0..n {
            let yx = representable(a, x);
            for mo in m.objects() {
                report.cells += 1;
                let source = tensor_presheaf(m, &mo, &yx);
                let rhs = enumerate_presheaf_mor(a, &source, f, limits)?;
                let lhs = m.hom_set(&mo, f.value(x));
                let forward = |e: &Mor<A::Base>| -> Vec<Mor<A::Base>> {
                    (0..n)
                        .map(|w| m.then(f.action(w, x), &m.tensor_mor(e, &m.identity(&a.hom(w, x)))))
                        .collect()
                };
                let backward = |alpha: &[Mor<A::Base>]| -> Mor<A::Base> { m.then(&alpha[x], &m.tensor_mor(&m.identity(&mo), &a.unit(x))) };
                let cell = format!("F{fi}, x={}, m={:?}", names[x], mo);
                for e in &lhs {
                    let image = forward(e);
                    if !rhs.contains(&image) {
                        report.failures.push(format!("{cell}: image of {e:?} is not a presheaf morphism"));
                    } else if backward(&image) != *e {
                        report.failures.push(format!("{cell}: round trip fails on {e:?}"));
                    }
                }
                for alpha in &rhs {
                    if forward(&backward(alpha)) != *alpha {
                        report.failures.push(format!("{cell}: round trip fails on {alpha:?}"));
                    }
                }
                if lhs.len() != rhs.len() {
                    report
                        .failures
                        .push(format!("{cell}: {} maps on the left, {} on the right", lhs.len(), rhs.len()));
                }
            }
        }
    }
    Ok(report)
}

/// For every `x, y` and base object `m`: `g ↦ ψ(x, y) ∘ (g ⊗ Y(x))` is a bijection
/// `Hom(m, hom(x, y)) → Hom(m ⊗ Y(x), Y(y))`.
pub fn check_fully_faithful<A>(a: &A, limits: &Limits) -> Result<CheckReport, PresheafError>
where
    A: Enriched,
    A::Base: Finite,
{
    let m = a.base();
    let n = a.object_count();
    let names = a.object_names();
    let mut report = CheckReport::default();
    for x in 0..n {
        let yx = representable(a, x);
        for y in 0..n {
            let yy = representable(a, y);
            let hxy = a.hom(x, y);
            for mo in m.objects() {
                report.cells += 1;
                let rhs = enumerate_presheaf_mor(a, &tensor_presheaf(m, &mo, &yx), &yy, limits)?;
                let lhs = m.hom_set(&mo, &hxy);
                let forward = |g: &Mor<A::Base>| -> Vec<Mor<A::Base>> {
                    (0..n)
                        .map(|w| m.then(&a.comp(w, x, y), &m.tensor_mor(g, &m.identity(&a.hom(w, x)))))
                        .collect()
                };
                let backward = |alpha: &[Mor<A::Base>]| -> Mor<A::Base> { m.then(&alpha[x], &m.tensor_mor(&m.identity(&mo), &a.unit(x))) };
                let cell = format!("x={}, y={}, m={:?}", names[x], names[y], mo);
                let images: Vec<_> = lhs.iter().map(forward).collect();
                let injective = images.iter().enumerate().all(|(i, v)| !images[..i].contains(v));
                if !injective || images.len() != rhs.len() || !images.iter().all(|v| rhs.contains(v)) {
                    report.failures.push(format!("{cell}: not a bijection"));
                }
                if lhs.iter().zip(&images).any(|(g, v)| backward(v) != *g) {
                    report.failures.push(format!("{cell}: inverse round trip fails"));
                }
            }
        }
    }
    Ok(report)
}

/// Representability of `m ↦ Hom(m ⊗ Y(x), Y(y))` inside the enumerated presheaf category.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HomObjectReport {
    pub pairs: usize,
    /// `hom(x, y)` with the Yoneda structure map is universal.
    pub canonical_universal: usize,
    /// The first representing object found is `hom(x, y)` itself.
    pub exact: usize,
    /// The first representing object found is isomorphic to `hom(x, y)`.
    pub isomorphic: usize,
    pub failures: Vec<String>,
}

pub fn check_hom_objects(a: &MCat, pc: &PresheafCat) -> Result<HomObjectReport, PresheafError> {
    let y = pc.yoneda(a)?;
    let n = a.object_count();
    let names = a.object_names();
    let base = a.base();
    let mut report = HomObjectReport::default();
    for x in 0..n {
        for z in 0..n {
            report.pairs += 1;
            let (yx, yz) = (y.ob_map[x], y.ob_map[z]);
            let h = a.hom(x, z);
            let canonical = *y.phi(n, x, z);
            if is_universal(&pc.module, &yx, &yz, &h, &canonical) {
                report.canonical_universal += 1;
            } else {
                report.failures.push(format!(
                    "({}, {}): hom object with its structure map is not universal",
                    names[x], names[z]
                ));
            }
            match hom_object(&pc.module, &yx, &yz) {
                Some((found, _)) => {
                    if found == h {
                        report.exact += 1;
                    }
                    if crate::tensored::find_isomorphism(base, &found, &h).is_some() {
                        report.isomorphic += 1;
                    } else {
                        report
                            .failures
                            .push(format!("({}, {}): search found a non-isomorphic object", names[x], names[z]));
                    }
                }
                None => report
                    .failures
                    .push(format!("({}, {}): no representing object", names[x], names[z])),
            }
        }
    }
    Ok(report)
}
