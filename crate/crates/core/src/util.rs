//! Small shared helpers: deterministic RNG, function-table composition,
//! subset iteration.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Default seed used by every randomized check in the crate. Reports echo the
/// seed so runs are reproducible.
pub const DEFAULT_SEED: u64 = 0xC0DE_2026;

/// Deterministic RNG for probe generation.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Composes two function tables: `(g_after_f)[x] = g[f[x]]`.
pub fn compose_tables(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

/// Identity table on `n` elements.
pub fn identity_table(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// True when the table is a bijection onto `0..table.len()`.
pub fn is_bijection(table: &[usize]) -> bool {
    let n = table.len();
    let mut seen = vec![false; n];
    for &v in table {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Inverse of a bijective table.
pub fn invert_table(table: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; table.len()];
    for (x, &v) in table.iter().enumerate() {
        inv[v] = x;
    }
    inv
}

/// Iterates over all function tables `dom -> 0..cod`, in lexicographic order.
pub struct FunctionTables {
    current: Option<Vec<usize>>,
    cod: usize,
}

impl FunctionTables {
    pub fn new(dom: usize, cod: usize) -> Self {
        let current = if cod == 0 && dom > 0 {
            None
        } else {
            Some(vec![0; dom])
        };
        FunctionTables { current, cod }
    }
}

impl Iterator for FunctionTables {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.cod {
                for v in next[i + 1..].iter_mut() {
                    *v = 0;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(cur)
    }
}

/// All subsets of `0..n` as bitmasks, ascending. Requires `n <= 63`.
pub fn all_subsets(n: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 63, "subset masks support at most 63 elements");
    0..(1u64 << n)
}

/// Members of a bitmask, ascending.
pub fn mask_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Bitmask of a set of elements.
pub fn mask_of(members: &[usize]) -> u64 {
    members.iter().fold(0u64, |m, &i| m | 1 << i)
}

/// All permutations of `0..n` (small `n`), via Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}
