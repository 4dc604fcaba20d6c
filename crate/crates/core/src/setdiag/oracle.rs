//! Naive reference implementations used by the test suite as independent
//! oracles. They recompute results by raw enumeration or fixed-point closure
//! and deliberately share no code with the main algorithms.

use super::SetValuedFunctor;
use crate::fincat::MorId;

/// Limit by filtering the full cartesian product of carriers.
pub fn limit_naive(d: &SetValuedFunctor) -> Vec<Vec<usize>> {
    let n = d.carriers.len();
    let mut out = Vec::new();
    let mut family = vec![0usize; n];
    loop {
        let mut ok = true;
        'check: for m in 0..d.index.n_morphisms() {
            let m = MorId(m);
            let (a, b) = (d.index.dom(m).0, d.index.cod(m).0);
            if d.carriers[a] == 0 {
                continue;
            }
            if d.action(m)[family[a]] != family[b] {
                ok = false;
                break 'check;
            }
        }
        if d.carriers.iter().any(|&c| c == 0) && n > 0 {
            ok = false;
        }
        if ok {
            out.push(family.clone());
        }
        // increment mixed-radix counter
        let mut i = n;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if d.carriers[i] == 0 {
                out.sort();
                return out;
            }
            family[i] += 1;
            if family[i] < d.carriers[i] {
                for v in family[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
            family[i] = 0;
        }
    }
}

/// Number of colimit classes via iterated relabeling until fixed point
/// (no union-find involved).
pub fn colimit_classes_naive(d: &SetValuedFunctor) -> usize {
    let offsets: Vec<usize> = d
        .carriers
        .iter()
        .scan(0, |acc, &c| {
            let o = *acc;
            *acc += c;
            Some(o)
        })
        .collect();
    let total: usize = d.carriers.iter().sum();
    let mut label: Vec<usize> = (0..total).collect();
    loop {
        let mut changed = false;
        for m in 0..d.index.n_morphisms() {
            let m = MorId(m);
            let (a, b) = (d.index.dom(m).0, d.index.cod(m).0);
            for x in 0..d.carriers[a] {
                let u = offsets[a] + x;
                let v = offsets[b] + d.action(m)[x];
                let min = label[u].min(label[v]);
                if label[u] != min {
                    label[u] = min;
                    changed = true;
                }
                if label[v] != min {
                    label[v] = min;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut distinct: Vec<usize> = label.into_iter().collect();
    distinct.sort();
    distinct.dedup();
    distinct.len()
}
