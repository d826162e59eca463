//! Index-level algorithms over [`FiniteGroup`]: closures, derived series,
//! Sylow subgroups, periodic-cohomology recognition, and isomorphism testing.

use std::collections::HashMap;

use super::subgroup::Subgroup;
use super::FiniteGroup;
use crate::error::{Error, Result};

/// Least `m ≥ 1` with `gᵐ = 1`.
pub fn element_order<G: FiniteGroup + ?Sized>(g: &G, i: usize) -> usize {
    let mut cur = i;
    let mut m = 1;
    while cur != 0 {
        cur = g.mul(cur, i);
        m += 1;
    }
    m
}

/// Subgroup generated by the given elements. Generators already inside the
/// running closure are skipped, so redundant generating sets cost little.
pub fn subgroup_closure<G: FiniteGroup + ?Sized>(g: &G, seeds: &[usize]) -> Subgroup {
    let mut present = vec![false; g.order()];
    present[0] = true;
    let mut members = vec![0usize];
    let mut kept: Vec<usize> = Vec::new();
    for &s in seeds {
        if present[s] {
            continue;
        }
        kept.push(s);
        present[s] = true;
        members.push(s);
        // re-close the member list under the kept generators
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &k in &kept {
                let y = g.mul(x, k);
                if !present[y] {
                    present[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
    }
    let mut indices: Vec<u32> = members.into_iter().map(|i| i as u32).collect();
    indices.sort_unstable();
    Subgroup::from_sorted(indices)
}

/// Smallest normal subgroup of `g` containing the seeds: alternate closing
/// under products and conjugating the generating set by `g`'s generators.
pub fn normal_closure<G: FiniteGroup + ?Sized>(g: &G, seeds: &[usize]) -> Subgroup {
    let mut kept: Vec<usize> = seeds.to_vec();
    let mut h = subgroup_closure(g, &kept);
    loop {
        let mut added = false;
        let conjugators: Vec<usize> = if g.generators().is_empty() {
            (0..g.order()).collect()
        } else {
            g.generators().to_vec()
        };
        for &x in &kept.clone() {
            for &c in &conjugators {
                let y = g.conjugate(c, x);
                if !h.contains(y) {
                    kept.push(y);
                    added = true;
                }
            }
        }
        if !added {
            return h;
        }
        h = subgroup_closure(g, &kept);
    }
}

/// Derived subgroup `[G, G]` as the normal closure of the commutators of
/// generator pairs (all-pairs commutators are unnecessary).
pub fn derived_subgroup<G: FiniteGroup + ?Sized>(g: &G) -> Subgroup {
    let gens: Vec<usize> = if g.generators().is_empty() {
        find_generating_subset(g)
    } else {
        g.generators().to_vec()
    };
    let mut seeds = Vec::new();
    for &a in &gens {
        for &b in &gens {
            if a != b {
                seeds.push(g.commutator(a, b));
            }
        }
    }
    normal_closure(g, &seeds)
}

pub fn is_perfect<G: FiniteGroup + ?Sized>(g: &G) -> bool {
    derived_subgroup(g).order() == g.order()
}

/// Derived subgroup of a subgroup `h ≤ g`, computed inside the parent's
/// index space (commutators of `h`'s generators, conjugation-closed in `h`).
pub fn derived_subgroup_of<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let gens = generating_subset_of(g, h);
    let mut seeds = Vec::new();
    for &a in &gens {
        for &b in &gens {
            if a != b {
                seeds.push(g.commutator(a, b));
            }
        }
    }
    let mut kept = seeds;
    let mut d = subgroup_closure(g, &kept);
    loop {
        let mut added = false;
        for &x in &kept.clone() {
            for &c in &gens {
                let y = g.conjugate(c, x);
                if !d.contains(y) {
                    kept.push(y);
                    added = true;
                }
            }
        }
        if !added {
            return d;
        }
        d = subgroup_closure(g, &kept);
    }
}

pub fn is_perfect_subgroup<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> bool {
    derived_subgroup_of(g, h).order() == h.order()
}

/// Greedy generating subset: scan elements in index order, keeping those not
/// yet inside the running closure.
pub fn find_generating_subset<G: FiniteGroup + ?Sized>(g: &G) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut h = Subgroup::trivial();
    for i in 1..g.order() {
        if !h.contains(i) {
            gens.push(i);
            h = subgroup_closure(g, &gens);
            if h.order() == g.order() {
                break;
            }
        }
    }
    gens
}

fn generating_subset_of<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut c = Subgroup::trivial();
    for i in h.iter() {
        if i == 0 {
            continue;
        }
        if !c.contains(i) {
            gens.push(i);
            c = subgroup_closure(g, &gens);
            if c.order() == h.order() {
                break;
            }
        }
    }
    gens
}

/// `{n ∈ g : n H n⁻¹ = H}`, scanning the whole parent.
pub fn normalizer<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Vec<usize> {
    let gens = generating_subset_of(g, h);
    (0..g.order())
        .filter(|&n| gens.iter().all(|&x| h.contains(g.conjugate(n, x))))
        .collect()
}

/// A Sylow `p`-subgroup: start from a cyclic `p`-subgroup and repeatedly
/// enlarge inside its normalizer (a non-Sylow `p`-subgroup always has a
/// strictly larger `p`-subgroup there) until the full `p`-power is reached.
pub fn sylow<G: FiniteGroup + ?Sized>(g: &G, p: u64) -> Result<Subgroup> {
    let order = g.order() as u64;
    if p < 2 || !order.is_multiple_of(p) {
        return Err(Error::PNotDividing(p, g.order()));
    }
    let mut target = 1u64;
    let mut rest = order;
    while rest.is_multiple_of(p) {
        target *= p;
        rest /= p;
    }

    // Cauchy: some element power has order exactly p
    let seed = (1..g.order())
        .find_map(|i| {
            let m = element_order(g, i) as u64;
            if m.is_multiple_of(p) {
                let mut x = i;
                for _ in 0..(m / p - 1) {
                    x = g.mul(x, i);
                }
                Some(x)
            } else {
                None
            }
        })
        .ok_or_else(|| Error::Internal("no p-element despite Cauchy".into()))?;

    let mut h = subgroup_closure(g, &[seed]);
    while (h.order() as u64) < target {
        let norm = normalizer(g, &h);
        let mut grown = false;
        for &y in &norm {
            if h.contains(y) {
                continue;
            }
            let m = element_order(g, y) as u64;
            if !is_power_of(m, p) {
                continue;
            }
            // replace y by the power whose image modulo h has order p
            let mut z = y;
            loop {
                let mut zp = z;
                for _ in 0..p - 1 {
                    zp = g.mul(zp, z);
                }
                if h.contains(zp) {
                    break;
                }
                z = zp;
            }
            let mut seeds: Vec<usize> = h.iter().collect();
            seeds.push(z);
            let candidate = subgroup_closure(g, &seeds);
            if is_power_of(candidate.order() as u64, p) {
                h = candidate;
                grown = true;
                break;
            }
        }
        if !grown {
            return Err(Error::Internal(
                "Sylow growth stalled below the full p-power".into(),
            ));
        }
    }
    Ok(h)
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoGroupClass {
    Cyclic,
    GeneralizedQuaternion,
    Other,
}

/// Classifies a 2-group: cyclic iff some element has full order;
/// generalized quaternion iff order ≥ 8, noncyclic, with a unique involution.
pub fn classify_2group<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Result<TwoGroupClass> {
    let n = h.order() as u64;
    if !is_power_of(n, 2) {
        return Err(Error::NotA2Group(h.order()));
    }
    if n == 1 {
        return Ok(TwoGroupClass::Cyclic);
    }
    let orders: Vec<usize> = h.iter().map(|i| element_order(g, i)).collect();
    if orders.iter().any(|&m| m == h.order()) {
        return Ok(TwoGroupClass::Cyclic);
    }
    let involutions = orders.iter().filter(|&&m| m == 2).count();
    if h.order() >= 8 && involutions == 1 {
        Ok(TwoGroupClass::GeneralizedQuaternion)
    } else {
        Ok(TwoGroupClass::Other)
    }
}

/// Periodic (Tate) cohomology: every odd Sylow subgroup cyclic, and the
/// 2-Sylow subgroup cyclic or generalized quaternion.
pub fn has_periodic_cohomology<G: FiniteGroup + ?Sized>(g: &G) -> Result<bool> {
    for p in prime_factors(g.order() as u64) {
        let s = sylow(g, p)?;
        if p == 2 {
            match classify_2group(g, &s)? {
                TwoGroupClass::Cyclic | TwoGroupClass::GeneralizedQuaternion => {}
                TwoGroupClass::Other => return Ok(false),
            }
        } else {
            let cyclic = s.iter().any(|i| element_order(g, i) == s.order());
            if !cyclic {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Conjugacy classes as orbits under conjugation by generators.
pub fn conjugacy_classes<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    let gens: Vec<usize> = if g.generators().is_empty() {
        find_generating_subset(g)
    } else {
        g.generators().to_vec()
    };
    let mut seen = vec![false; g.order()];
    let mut classes = Vec::new();
    for start in 0..g.order() {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for &c in &gens {
                let y = g.conjugate(c, x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    frontier.push(y);
                }
            }
        }
        classes.push(orbit);
    }
    classes
}

const ISO_ORDER_LIMIT: usize = 10_000;

/// Abstract isomorphism test by backtracking over generator images, pruned
/// by (element order, conjugacy class size) fingerprints. Sound and complete
/// at the supported orders.
pub fn isomorphic<A, B>(a: &A, b: &B) -> Result<bool>
where
    A: FiniteGroup + ?Sized,
    B: FiniteGroup + ?Sized,
{
    if a.order() > ISO_ORDER_LIMIT || b.order() > ISO_ORDER_LIMIT {
        return Err(Error::TooLarge {
            order: a.order().max(b.order()),
            limit: ISO_ORDER_LIMIT,
        });
    }
    if a.order() != b.order() {
        return Ok(false);
    }
    let n = a.order();

    let fingerprint = |g: &dyn DynGroup| -> Vec<(usize, usize)> {
        let mut fp = vec![(0usize, 0usize); g.order()];
        for (i, f) in fp.iter_mut().enumerate() {
            f.0 = g.element_order(i);
        }
        for class in g.classes() {
            for &i in &class {
                fp[i].1 = class.len();
            }
        }
        fp
    };
    let wrap_a = Dyn(a);
    let wrap_b = Dyn(b);
    let fp_a = fingerprint(&wrap_a);
    let fp_b = fingerprint(&wrap_b);
    let mut sorted_a = fp_a.clone();
    let mut sorted_b = fp_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(false);
    }

    let gens: Vec<usize> = if a.generators().is_empty() {
        find_generating_subset(a)
    } else {
        // the declared generators, trimmed of duplicates/identity
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for &g in a.generators() {
            if g != 0 && !seen[g] {
                seen[g] = true;
                out.push(g);
            }
        }
        out
    };
    if gens.is_empty() {
        return Ok(true); // both trivial
    }

    // BFS word structure on `a` over the chosen generators
    let mut parent: Vec<(usize, usize)> = vec![(0, usize::MAX); n];
    let mut order_seen = vec![false; n];
    order_seen[0] = true;
    let mut bfs = vec![0usize];
    let mut cursor = 0;
    while cursor < bfs.len() {
        let x = bfs[cursor];
        cursor += 1;
        for (slot, &g) in gens.iter().enumerate() {
            let y = a.mul(x, g);
            if !order_seen[y] {
                order_seen[y] = true;
                parent[y] = (x, slot);
                bfs.push(y);
            }
        }
    }
    if bfs.len() != n {
        return Err(Error::Internal("generating set does not generate".into()));
    }

    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| (0..n).filter(|&h| fp_b[h] == fp_a[g]).collect())
        .collect();

    let mut images = vec![0usize; gens.len()];
    let mut image_of = vec![usize::MAX; n];
    Ok(search(
        a, b, &gens, &candidates, &bfs, &parent, &mut images, 0, &mut image_of,
    ))
}

#[allow(clippy::too_many_arguments)]
fn search<A, B>(
    a: &A,
    b: &B,
    gens: &[usize],
    candidates: &[Vec<usize>],
    bfs: &[usize],
    parent: &[(usize, usize)],
    images: &mut Vec<usize>,
    depth: usize,
    image_of: &mut Vec<usize>,
) -> bool
where
    A: FiniteGroup + ?Sized,
    B: FiniteGroup + ?Sized,
{
    if depth == gens.len() {
        return verify_homomorphism(a, b, gens, images, bfs, parent, image_of);
    }
    for &cand in &candidates[depth] {
        images[depth] = cand;
        if search(a, b, gens, candidates, bfs, parent, images, depth + 1, image_of) {
            return true;
        }
    }
    false
}

/// Builds the word-induced map and verifies it is a bijective homomorphism.
/// Checking `f(x·g) = f(x)·f(g)` for all x and all generators g suffices:
/// every element is a word in the generators, so multiplicativity follows
/// by induction on word length.
fn verify_homomorphism<A, B>(
    a: &A,
    b: &B,
    gens: &[usize],
    images: &[usize],
    bfs: &[usize],
    parent: &[(usize, usize)],
    image_of: &mut [usize],
) -> bool
where
    A: FiniteGroup + ?Sized,
    B: FiniteGroup + ?Sized,
{
    let n = a.order();
    for v in image_of.iter_mut() {
        *v = usize::MAX;
    }
    image_of[0] = 0;
    for &x in &bfs[1..] {
        let (p, slot) = parent[x];
        image_of[x] = b.mul(image_of[p], images[slot]);
    }
    // injectivity
    let mut hit = vec![false; n];
    for &y in image_of.iter() {
        if y == usize::MAX || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    // multiplicativity on generator edges
    for x in 0..n {
        for (slot, &g) in gens.iter().enumerate() {
            if image_of[a.mul(x, g)] != b.mul(image_of[x], images[slot]) {
                return false;
            }
        }
    }
    true
}

// object-safe shim so the fingerprint closure can work over both groups
trait DynGroup {
    fn order(&self) -> usize;
    fn element_order(&self, i: usize) -> usize;
    fn classes(&self) -> Vec<Vec<usize>>;
}

struct Dyn<'a, G: FiniteGroup + ?Sized>(&'a G);

impl<G: FiniteGroup + ?Sized> DynGroup for Dyn<'_, G> {
    fn order(&self) -> usize {
        self.0.order()
    }
    fn element_order(&self, i: usize) -> usize {
        element_order(self.0, i)
    }
    fn classes(&self) -> Vec<Vec<usize>> {
        conjugacy_classes(self.0)
    }
}

/// Membership- and conjugation-level check that `h` is normal in `g`.
pub fn is_normal<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> bool {
    let conjugators: Vec<usize> = if g.generators().is_empty() {
        (0..g.order()).collect()
    } else {
        g.generators().to_vec()
    };
    h.iter()
        .all(|x| conjugators.iter().all(|&c| h.contains(g.conjugate(c, x))))
}

/// Order histogram, handy for fingerprint-style assertions in tests.
pub fn order_census<G: FiniteGroup + ?Sized>(g: &G) -> HashMap<usize, usize> {
    let mut census = HashMap::new();
    for i in 0..g.order() {
        *census.entry(element_order(g, i)).or_insert(0) += 1;
    }
    census
}
