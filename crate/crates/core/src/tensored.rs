//! Left-tensored categories as strict unital modules, and representability
//! of `m ↦ Hom(m·x, y)` by an object of the base.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::category::{Category, Finite, LeftModule, Monoidal, Ob};
use crate::fincat::FinCat;
use crate::monoidal::MonStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("malformed action tables: {0}")]
    Shape(String),
    #[error("action of `{f}` on `{s}` has the wrong endpoints")]
    TypeMismatch { f: String, s: String },
    #[error("unit does not act as the identity at {0}")]
    UnitActionViolation(String),
    #[error("module law fails at {0}")]
    ModuleLawViolation(String),
    #[error("action is not bifunctorial at {0}")]
    BifunctorialityViolation(String),
}

/// A finite category with a strict left action of a finite strict monoidal base.
///
/// `act_ob[m·n + b]` and `act_mor[f·k + s]`, where `n`, `k` count carrier objects and morphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LTensored {
    base: Arc<MonStr>,
    carrier: FinCat,
    act_ob: Vec<usize>,
    act_mor: Vec<usize>,
}

impl LTensored {
    pub fn new(base: Arc<MonStr>, carrier: FinCat, act_ob: Vec<usize>, act_mor: Vec<usize>) -> Result<LTensored, ModuleError> {
        let b = LTensored {
            base,
            carrier,
            act_ob,
            act_mor,
        };
        match b.audit().into_iter().next() {
            Some(e) => Err(e),
            None => Ok(b),
        }
    }

    /// The base acting on itself by its tensor.
    pub fn regular(base: Arc<MonStr>) -> LTensored {
        let carrier = base.carrier().clone();
        let act_ob = base.tensor_ob_table().to_vec();
        let act_mor = base.tensor_mor_table().to_vec();
        LTensored {
            base,
            carrier,
            act_ob,
            act_mor,
        }
    }

    /// An action on a thin category, determined by its effect on objects.
    pub fn thin(base: Arc<MonStr>, carrier: FinCat, op: impl Fn(usize, usize) -> usize) -> Result<LTensored, ModuleError> {
        let (nb, kb) = (base.object_count(), base.carrier().morphism_count());
        let (nc, kc) = (carrier.object_count(), carrier.morphism_count());
        let act_ob: Vec<usize> = (0..nb * nc).map(|i| op(i / nc, i % nc)).collect();
        let mut act_mor = vec![0; kb * kc];
        for f in 0..kb {
            for s in 0..kc {
                let bc = base.carrier();
                let d = act_ob[bc.source(f) * nc + carrier.source(s)];
                let t = act_ob[bc.target(f) * nc + carrier.target(s)];
                match carrier.hom(d, t) {
                    [only] => act_mor[f * kc + s] = *only,
                    _ => {
                        return Err(ModuleError::TypeMismatch {
                            f: bc.morphism_name(f).into(),
                            s: carrier.morphism_name(s).into(),
                        })
                    }
                }
            }
        }
        LTensored::new(base, carrier, act_ob, act_mor)
    }

    pub fn audit(&self) -> Vec<ModuleError> {
        let bc = self.base.carrier();
        let (nb, kb) = (bc.object_count(), bc.morphism_count());
        let (nc, kc) = (self.carrier.object_count(), self.carrier.morphism_count());
        if self.act_ob.len() != nb * nc || self.act_ob.iter().any(|&x| x >= nc) {
            return vec![ModuleError::Shape("act_ob must be a total object table".into())];
        }
        if self.act_mor.len() != kb * kc || self.act_mor.iter().any(|&x| x >= kc) {
            return vec![ModuleError::Shape("act_mor must be a total morphism table".into())];
        }
        for f in 0..kb {
            for s in 0..kc {
                let h = self.act_mor[f * kc + s];
                let c = &self.carrier;
                if c.source(h) != self.act_ob[bc.source(f) * nc + c.source(s)]
                    || c.target(h) != self.act_ob[bc.target(f) * nc + c.target(s)]
                {
                    return vec![ModuleError::TypeMismatch {
                        f: bc.morphism_name(f).into(),
                        s: c.morphism_name(s).into(),
                    }];
                }
            }
        }
        check_module_laws(
            self,
            &(0..nb).collect::<Vec<_>>(),
            &(0..kb).collect::<Vec<_>>(),
            &(0..nc).collect::<Vec<_>>(),
            &(0..kc).collect::<Vec<_>>(),
            |m| bc.morphism_name(*m).to_string(),
            |s| self.carrier.morphism_name(*s).to_string(),
        )
    }

    pub fn base_arc(&self) -> &Arc<MonStr> {
        &self.base
    }

    pub fn carrier(&self) -> &FinCat {
        &self.carrier
    }

    pub fn act_ob_table(&self) -> &[usize] {
        &self.act_ob
    }

    pub fn act_mor_table(&self) -> &[usize] {
        &self.act_mor
    }

    /// Rebuilds the module with one action cell replaced, without validation.
    pub fn with_act_mor_cell(&self, f: usize, s: usize, value: usize) -> LTensored {
        let mut out = self.clone();
        let kc = self.carrier.morphism_count();
        out.act_mor[f * kc + s] = value;
        out
    }
}

impl Category for LTensored {
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

impl Finite for LTensored {
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

impl LeftModule for LTensored {
    type Base = MonStr;

    fn base(&self) -> &MonStr {
        &self.base
    }
    fn act_ob(&self, m: &usize, b: &usize) -> usize {
        self.act_ob[m * self.carrier.object_count() + b]
    }
    fn act_mor(&self, f: &usize, g: &usize) -> usize {
        self.act_mor[f * self.carrier.morphism_count() + g]
    }
}

/// Unit action, module law and bifunctoriality of an action on the given probes,
/// first violation of each in that order. Actions are assumed well-typed.
pub fn check_module_laws<B: LeftModule>(
    b: &B,
    base_obs: &[Ob<B::Base>],
    base_mors: &[<B::Base as Category>::Mor],
    obs: &[B::Ob],
    mors: &[B::Mor],
    base_name: impl Fn(&<B::Base as Category>::Mor) -> String,
    mor_name: impl Fn(&B::Mor) -> String,
) -> Vec<ModuleError> {
    let m = b.base();
    let one = m.unit();
    let id_one = m.identity(&one);
    let mut found = Vec::new();

    if let Some(x) = obs.iter().find(|x| b.act_ob(&one, x) != **x) {
        found.push(ModuleError::UnitActionViolation(format!("object {x:?}")));
    } else if let Some(s) = mors.iter().find(|s| b.act_mor(&id_one, s) != **s) {
        found.push(ModuleError::UnitActionViolation(mor_name(s)));
    }

    'law: {
        for p in base_obs {
            for q in base_obs {
                for x in obs {
                    if b.act_ob(p, &b.act_ob(q, x)) != b.act_ob(&m.tensor_ob(p, q), x) {
                        found.push(ModuleError::ModuleLawViolation(format!("objects ({p:?}, {q:?}, {x:?})")));
                        break 'law;
                    }
                }
            }
        }
        for f in base_mors {
            for g in base_mors {
                for s in mors {
                    if b.act_mor(f, &b.act_mor(g, s)) != b.act_mor(&m.tensor_mor(f, g), s) {
                        found.push(ModuleError::ModuleLawViolation(format!(
                            "({}, {}, {})",
                            base_name(f),
                            base_name(g),
                            mor_name(s)
                        )));
                        break 'law;
                    }
                }
            }
        }
    }

    'bif: {
        for p in base_obs {
            for x in obs {
                if b.act_mor(&m.identity(p), &b.identity(x)) != b.identity(&b.act_ob(p, x)) {
                    found.push(ModuleError::BifunctorialityViolation(format!("identity at ({p:?}, {x:?})")));
                    break 'bif;
                }
            }
        }
        let mut carrier_pairs = Vec::new();
        for s2 in mors {
            for s1 in mors {
                if let Some(s) = b.compose(s2, s1) {
                    carrier_pairs.push((s2, s1, s));
                }
            }
        }
        for f2 in base_mors {
            for f1 in base_mors {
                let Some(f) = m.compose(f2, f1) else { continue };
                for (s2, s1, s) in &carrier_pairs {
                    let whole = b.act_mor(&f, s);
                    let parts = b.compose(&b.act_mor(f2, s2), &b.act_mor(f1, s1));
                    if parts.as_ref() != Some(&whole) {
                        found.push(ModuleError::BifunctorialityViolation(format!(
                            "({}∘{}, {}∘{})",
                            base_name(f2),
                            base_name(f1),
                            mor_name(s2),
                            mor_name(s1)
                        )));
                        break 'bif;
                    }
                }
            }
        }
    }
    found
}

/// True when `g ↦ u ∘ act(g, id_x)` is a bijection `Hom(m, h) → Hom(act(m, x), y)` for every base object `m`.
pub fn is_universal<B>(b: &B, x: &B::Ob, y: &B::Ob, h: &Ob<B::Base>, u: &B::Mor) -> bool
where
    B: LeftModule + Finite,
    B::Base: Finite,
{
    let m = b.base();
    let id_x = b.identity(x);
    m.objects().iter().all(|p| {
        let targets = b.hom_set(&b.act_ob(p, x), y);
        let images: Vec<B::Mor> = m.hom_set(p, h).iter().map(|g| b.then(u, &b.act_mor(g, &id_x))).collect();
        images.len() == targets.len()
            && images.iter().enumerate().all(|(i, v)| !images[..i].contains(v))
            && targets.iter().all(|t| images.contains(t))
    })
}

/// Every `(h, u)` with `u: act(h, x) → y` universal, in declaration order of `h` then `u`.
pub fn representing_pairs<B>(b: &B, x: &B::Ob, y: &B::Ob) -> Vec<(Ob<B::Base>, B::Mor)>
where
    B: LeftModule + Finite,
    B::Base: Finite,
{
    let mut out = Vec::new();
    for h in b.base().objects() {
        for u in b.hom_set(&b.act_ob(&h, x), y) {
            if is_universal(b, x, y, &h, &u) {
                out.push((h.clone(), u));
            }
        }
    }
    out
}

/// The first object of the base representing `m ↦ Hom(act(m, x), y)`, with its universal map.
pub fn hom_object<B>(b: &B, x: &B::Ob, y: &B::Ob) -> Option<(Ob<B::Base>, B::Mor)>
where
    B: LeftModule + Finite,
    B::Base: Finite,
{
    let m = b.base();
    for h in m.objects() {
        for u in b.hom_set(&b.act_ob(&h, x), y) {
            if is_universal(b, x, y, &h, &u) {
                return Some((h, u));
            }
        }
    }
    None
}

/// Base morphisms `k: p' → p` along which `g ↦ u ∘ act(g, id_x)` fails to be natural.
pub fn naturality_failures<B>(b: &B, x: &B::Ob, h: &Ob<B::Base>, u: &B::Mor) -> Vec<<B::Base as Category>::Mor>
where
    B: LeftModule + Finite,
    B::Base: Finite,
{
    let m = b.base();
    let id_x = b.identity(x);
    let mut bad = Vec::new();
    for k in m.morphisms() {
        let p = m.cod(&k);
        let ok = m.hom_set(&p, h).iter().all(|g| {
            let direct = b.then(u, &b.act_mor(&m.then(g, &k), &id_x));
            let stepwise = b.then(&b.then(u, &b.act_mor(g, &id_x)), &b.act_mor(&k, &id_x));
            direct == stepwise
        });
        if !ok {
            bad.push(k);
        }
    }
    bad
}

/// A pair of mutually inverse morphisms `h ⇄ h'` in a finite category, if one exists.
pub fn find_isomorphism<C: Finite>(c: &C, h: &C::Ob, h2: &C::Ob) -> Option<(C::Mor, C::Mor)> {
    c.hom_set(h, h2).into_iter().find_map(|f| c.inverse(&f).map(|g| (f, g)))
}
