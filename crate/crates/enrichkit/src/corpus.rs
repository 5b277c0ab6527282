//! Seeded random instances: finite monoidal bases, enriched categories over them,
//! small finite categories and Set-valued functors on them.
//!
//! Every generator draws from a caller-supplied `ChaCha8Rng`, so a seed fixes the
//! whole corpus. Generators that search (enriched structure, functors) fall back to
//! a trivially valid instance when their node budget runs out.

use std::sync::{Arc, OnceLock};

use enrichkit_core::category::{Category, Monoidal};
use enrichkit_core::enriched::RawMCat;
use enrichkit_core::finset::maps_between;
use enrichkit_core::wcolim::{set_diagram, set_weight, Weight};
use enrichkit_core::{FinCat, Limits, MCat, MFunET, MonStr, SetEnriched, SkMap, SkSet};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn names(prefix: &str, k: usize) -> Vec<String> {
    (0..k).map(|i| format!("{prefix}{i}")).collect()
}

fn is_associative(k: usize, mul: &[usize]) -> bool {
    (0..k).all(|a| (0..k).all(|b| (0..k).all(|c| mul[mul[a * k + b] * k + c] == mul[a * k + mul[b * k + c]])))
}

fn monoid_tables(k: usize) -> Vec<Vec<usize>> {
    let free = (k - 1) * (k - 1);
    let mut found = Vec::new();
    for code in 0..k.pow(free as u32) {
        let mut mul = vec![0; k * k];
        for i in 0..k {
            mul[i] = i;
            mul[i * k] = i;
        }
        let mut c = code;
        for a in 1..k {
            for b in 1..k {
                mul[a * k + b] = c % k;
                c /= k;
            }
        }
        if is_associative(k, &mul) {
            found.push(mul);
        }
    }
    found
}

/// A uniformly chosen monoid table on `0..k` (`1 ≤ k ≤ 4`) with unit `0`.
pub fn random_monoid(rng: &mut ChaCha8Rng, k: usize, commutative: bool) -> Vec<usize> {
    static TABLES: OnceLock<Vec<Vec<Vec<usize>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| (1..=4).map(monoid_tables).collect());
    let comm = |mul: &&Vec<usize>| (0..k).all(|a| (0..k).all(|b| mul[a * k + b] == mul[b * k + a]));
    let pool: Vec<&Vec<usize>> = tables[k - 1].iter().filter(|t| !commutative || comm(t)).collect();
    (*pool.choose(rng).expect("the trivial table is always a monoid")).clone()
}

/// A strict monoidal base with at most 3 objects and at most 9 morphisms.
pub fn random_base(rng: &mut ChaCha8Rng) -> MonStr {
    match rng.random_range(0..4) {
        0 => {
            let k = rng.random_range(1..=3);
            MonStr::discrete_monoid(&names("m", k), &random_monoid(rng, k, false)).expect("discrete monoid")
        }
        1 => {
            let k = rng.random_range(1..=3);
            let top = k - 1;
            match rng.random_range(0..3) {
                0 => MonStr::chain(k, top, |a, b| a.min(b)),
                1 => MonStr::chain(k, 0, |a, b| a.max(b)),
                _ => MonStr::chain(k, 0, |a, b| (a + b).min(top)),
            }
            .expect("monotone chain operation")
        }
        2 => {
            let k = rng.random_range(1..=4);
            MonStr::one_object(&names("g", k), &random_monoid(rng, k, true)).expect("commutative monoid")
        }
        _ => {
            let k = rng.random_range(1..=3);
            let j = rng.random_range(1..=3);
            let a = MonStr::one_object(&names("g", k), &random_monoid(rng, k, true)).expect("commutative monoid");
            let b = MonStr::discrete_monoid(&names("m", j), &random_monoid(rng, j, false)).expect("discrete monoid");
            MonStr::product(&a, &b).expect("product base")
        }
    }
}

/// Backtracking search for unit and composition maps making `hom` an enriched category.
fn solve_mcat(rng: &mut ChaCha8Rng, m: &MonStr, n: usize, hom: &[usize], budget: &mut usize) -> Option<RawMCat> {
    let c = m.carrier();
    let mut domains = Vec::new();
    for x in 0..n {
        domains.push(c.hom(m.unit_object(), hom[x * n + x]).to_vec());
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                domains.push(c.hom(m.tensor_ob(&hom[y * n + z], &hom[x * n + y]), hom[x * n + z]).to_vec());
            }
        }
    }
    if domains.iter().any(|d| d.is_empty()) {
        return None;
    }
    for d in &mut domains {
        d.shuffle(rng);
    }
    let comp_cell = |x: usize, y: usize, z: usize| n + (x * n + y) * n + z;
    let mut value: Vec<Option<usize>> = vec![None; domains.len()];
    // law instances indexed by the cells they read
    let mut assoc_at: Vec<Vec<[usize; 6]>> = vec![Vec::new(); domains.len()];
    let mut unit_at: Vec<Vec<[usize; 4]>> = vec![Vec::new(); domains.len()];
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let used = [comp_cell(w, y, z), comp_cell(w, x, y), comp_cell(w, x, z), comp_cell(x, y, z)];
                    let law = [used[0], used[1], used[2], used[3], hom[y * n + z], hom[w * n + x]];
                    let mut seen = used.to_vec();
                    seen.sort_unstable();
                    seen.dedup();
                    for j in seen {
                        assoc_at[j].push(law);
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for (side, u, k) in [(0, y, comp_cell(x, y, y)), (1, x, comp_cell(x, x, y))] {
                let law = [side, u, k, hom[x * n + y]];
                unit_at[u].push(law);
                if k != u {
                    unit_at[k].push(law);
                }
            }
        }
    }
    let consistent = |value: &[Option<usize>], i: usize| -> bool {
        let id = |o: usize| m.identity(&o);
        for &[c0, c1, c2, c3, hyz, hwx] in &assoc_at[i] {
            let (Some(v0), Some(v1), Some(v2), Some(v3)) = (value[c0], value[c1], value[c2], value[c3]) else {
                continue;
            };
            let lhs = m.then(&v0, &m.tensor_mor(&id(hyz), &v1));
            let rhs = m.then(&v2, &m.tensor_mor(&v3, &id(hwx)));
            if lhs != rhs {
                return false;
            }
        }
        for &[side, u, k, h] in &unit_at[i] {
            let (Some(vu), Some(vk)) = (value[u], value[k]) else {
                continue;
            };
            let idh = id(h);
            let t = if side == 0 {
                m.tensor_mor(&vu, &idh)
            } else {
                m.tensor_mor(&idh, &vu)
            };
            if m.then(&vk, &t) != idh {
                return false;
            }
        }
        true
    };
    fn go(
        i: usize,
        value: &mut Vec<Option<usize>>,
        domains: &[Vec<usize>],
        budget: &mut usize,
        ok: &dyn Fn(&[Option<usize>], usize) -> bool,
    ) -> bool {
        if i == domains.len() {
            return true;
        }
        for &d in &domains[i] {
            if *budget == 0 {
                return false;
            }
            *budget -= 1;
            value[i] = Some(d);
            if ok(value, i) && go(i + 1, value, domains, budget, ok) {
                return true;
            }
        }
        value[i] = None;
        false
    }
    if !go(0, &mut value, &domains, budget, &consistent) {
        return None;
    }
    let value: Vec<usize> = value.into_iter().map(|v| v.expect("assigned")).collect();
    Some(RawMCat {
        objects: names("x", n),
        hom: hom.to_vec(),
        unit: value[..n].to_vec(),
        comp: value[n..].to_vec(),
    })
}

/// An enriched category over `base` with at most `max_objects` objects.
pub fn random_mcat(rng: &mut ChaCha8Rng, base: Arc<MonStr>, max_objects: usize) -> MCat {
    let n = rng.random_range(1..=max_objects.max(1));
    let nb = base.object_count();
    for _ in 0..40 {
        let hom: Vec<usize> = (0..n * n).map(|_| rng.random_range(0..nb)).collect();
        let mut budget = 20_000;
        if let Some(raw) = solve_mcat(rng, &base, n, &hom, &mut budget) {
            if let Ok(a) = MCat::new(base.clone(), raw) {
                return a;
            }
        }
    }
    let i = base.unit_object();
    let e = base.identity(&i);
    let raw = RawMCat {
        objects: names("x", n),
        hom: vec![i; n * n],
        unit: vec![e; n],
        comp: vec![e; n * n * n],
    };
    MCat::new(base, raw).expect("constant enriched category")
}

/// A pair `(M, A)` within the corpus bounds: `|Ob M| ≤ 3`, `|Mor M| ≤ 9`, `|Ob A| ≤ 3`.
pub fn random_pair(rng: &mut ChaCha8Rng) -> MCat {
    let base = Arc::new(random_base(rng));
    random_mcat(rng, base, 3)
}

/// A finite category with at most 3 objects and hom-sets of size at most 3.
pub fn random_set_category(rng: &mut ChaCha8Rng) -> FinCat {
    loop {
        let cat = match rng.random_range(0..3) {
            0 => {
                let k = rng.random_range(1..=3);
                FinCat::monoid("*", &names("g", k), &random_monoid(rng, k, false)).expect("monoid category")
            }
            1 => {
                let n = rng.random_range(1..=3);
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|_| rng.random_bool(0.5))
                    .collect();
                let below = |i: usize, j: usize| {
                    i == j || edges.contains(&(i, j)) || (i < j && (i + 1..j).any(|k| edges.contains(&(i, k)) && edges.contains(&(k, j))))
                };
                FinCat::preorder(&names("p", n), below).expect("preorder")
            }
            _ => {
                let n = rng.random_range(1..=3);
                let mut edges = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        for _ in 0..rng.random_range(0..=2) {
                            edges.push((i, j));
                        }
                    }
                }
                match free_category(n, &edges) {
                    Some(c) => c,
                    None => continue,
                }
            }
        };
        let n = cat.object_count();
        if (0..n).all(|x| (0..n).all(|y| cat.hom(x, y).len() <= 3)) {
            return cat;
        }
    }
}

/// The free category on an acyclic graph whose edges go from lower to higher objects.
pub fn free_category(n: usize, edges: &[(usize, usize)]) -> Option<FinCat> {
    // paths as edge sequences, listed by length
    let mut paths: Vec<Vec<usize>> = (0..n).map(|_| Vec::new()).collect();
    let mut ends: Vec<(usize, usize)> = (0..n).map(|x| (x, x)).collect();
    let mut frontier: Vec<usize> = Vec::new();
    for (e, &(s, t)) in edges.iter().enumerate() {
        paths.push(vec![e]);
        ends.push((s, t));
        frontier.push(paths.len() - 1);
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &p in &frontier {
            for (e, &(s, t)) in edges.iter().enumerate() {
                if s == ends[p].1 {
                    let mut q = paths[p].clone();
                    q.push(e);
                    paths.push(q);
                    ends.push((ends[p].0, t));
                    next.push(paths.len() - 1);
                }
            }
        }
        if paths.len() > 64 {
            return None;
        }
        frontier = next;
    }
    let label = |p: &Vec<usize>| -> String { p.iter().rev().map(|e| format!("u{e}")).collect::<Vec<_>>().join("∘") };
    let object_names = names("v", n);
    let morphisms = (0..paths.len())
        .map(|i| {
            let name = if i < n {
                format!("id_{}", object_names[i])
            } else {
                label(&paths[i])
            };
            (name, ends[i].0, ends[i].1)
        })
        .collect();
    FinCat::from_fn(
        object_names,
        morphisms,
        (0..n).collect(),
        |g, f| {
            if g < n {
                return Some(f);
            }
            if f < n {
                return Some(g);
            }
            let mut q = paths[f].clone();
            q.extend(&paths[g]);
            paths.iter().position(|p| *p == q)
        },
        &Limits::default(),
    )
    .ok()
}

/// Tables for a Set-valued functor on `cat`, covariant or contravariant.
///
/// Values are drawn from `0..=max_card`; maps are found by backtracking, falling
/// back to the constant one-point functor.
pub fn random_set_functor(rng: &mut ChaCha8Rng, cat: &FinCat, max_card: usize, contravariant: bool) -> (Vec<usize>, Vec<SkMap>) {
    let n = cat.object_count();
    let k = cat.morphism_count();
    let ends = |f: usize| {
        let (s, t) = (cat.source(f), cat.target(f));
        if contravariant {
            (t, s)
        } else {
            (s, t)
        }
    };
    for _ in 0..20 {
        let values: Vec<usize> = (0..n).map(|_| rng.random_range(0..=max_card)).collect();
        let mut domains: Vec<Vec<SkMap>> = (0..k)
            .map(|f| {
                if cat.is_identity(f) {
                    vec![SkMap::identity(values[cat.source(f)])]
                } else {
                    let (s, t) = ends(f);
                    maps_between(values[s], values[t])
                }
            })
            .collect();
        for d in &mut domains {
            d.shuffle(rng);
        }
        let mut chosen: Vec<Option<SkMap>> = vec![None; k];
        let mut budget = 50_000usize;
        if assign_functor(cat, contravariant, 0, &domains, &mut chosen, &mut budget) {
            return (values, chosen.into_iter().map(|m| m.expect("assigned")).collect());
        }
    }
    (vec![1; n], (0..k).map(|_| SkMap::identity(1)).collect())
}

fn assign_functor(
    cat: &FinCat,
    contravariant: bool,
    f: usize,
    domains: &[Vec<SkMap>],
    chosen: &mut Vec<Option<SkMap>>,
    budget: &mut usize,
) -> bool {
    if f == domains.len() {
        return true;
    }
    for cand in &domains[f] {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        chosen[f] = Some(cand.clone());
        if functor_consistent(cat, contravariant, f, chosen) && assign_functor(cat, contravariant, f + 1, domains, chosen, budget) {
            return true;
        }
    }
    chosen[f] = None;
    false
}

fn functor_consistent(cat: &FinCat, contravariant: bool, f: usize, chosen: &[Option<SkMap>]) -> bool {
    let k = cat.morphism_count();
    for g in 0..k {
        for h in 0..k {
            let Some(gh) = cat.try_compose(g, h) else { continue };
            if f != g && f != h && f != gh {
                continue;
            }
            let (Some(mg), Some(mh), Some(mgh)) = (&chosen[g], &chosen[h], &chosen[gh]) else {
                continue;
            };
            let composite = if contravariant { mh.after(mg) } else { mg.after(mh) };
            if composite.as_ref() != Some(mgh) {
                return false;
            }
        }
    }
    true
}

/// A random diagram `A → FinSets` with values of cardinality at most `max_card`.
pub fn random_diagram(rng: &mut ChaCha8Rng, a: &SetEnriched, max_card: usize) -> MFunET<SkSet, SkMap> {
    let (values, maps) = random_set_functor(rng, a.category(), max_card, false);
    set_diagram(a, &values, &maps).expect("tables come from the search")
}

/// A random finite-set presheaf on `A`.
pub fn random_weight(rng: &mut ChaCha8Rng, a: &SetEnriched, max_card: usize) -> Weight {
    let (values, maps) = random_set_functor(rng, a.category(), max_card, true);
    set_weight(a, &values, &maps).expect("tables come from the search")
}

#[cfg(test)]
mod tests {
    use super::*;
    use enrichkit_core::mfunctor::validate_mfun_et;
    use enrichkit_core::presheaf::audit_presheaf;
    use enrichkit_core::{Enriched, FinSets};

    #[test]
    fn generated_instances_are_valid_and_within_bounds() {
        let mut r = rng(7);
        for _ in 0..60 {
            let m = random_base(&mut r);
            assert!(m.audit().is_empty());
            assert!(m.object_count() <= 3 && m.carrier().morphism_count() <= 9);
            let a = random_mcat(&mut r, Arc::new(m), 3);
            assert!(a.audit().is_empty());
            assert!(a.object_names().len() <= 3);
        }
        for _ in 0..60 {
            let c = random_set_category(&mut r);
            let a = SetEnriched::new(c);
            let f = random_diagram(&mut r, &a, 3);
            validate_mfun_et(&a, &FinSets, &f).unwrap();
            let w = random_weight(&mut r, &a, 3);
            assert!(audit_presheaf(&a, &w).is_empty());
        }
    }

    #[test]
    fn generators_are_reproducible() {
        let a = random_pair(&mut rng(11));
        let b = random_pair(&mut rng(11));
        assert_eq!(a, b);
    }

    #[test]
    fn free_category_counts_paths() {
        // u0: 0→1, u1: 1→2, u2: 0→2: hom(0,2) = {u2, u1∘u0}
        let c = free_category(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(c.hom(0, 2).len(), 2);
        assert_eq!(c.morphism_count(), 3 + 4);
    }

    #[test]
    fn monoid_tables_are_associative() {
        let mut r = rng(3);
        for k in 1..=3 {
            for _ in 0..10 {
                let t = random_monoid(&mut r, k, false);
                assert!(is_associative(k, &t));
            }
        }
    }
}
