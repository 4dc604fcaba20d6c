//! Density checking: the nerve `B ↦ Hom(G−, B)` is fully faithful, verified
//! by exhaustive enumeration of natural families between nerves, with
//! constraint propagation along precomposition. A cross-check against the
//! colimit formulation is provided for small categories.

use super::{comma_category, FinCategory, FinFunctor, MorId, ObjId};
use std::collections::HashMap;

/// A natural family between two nerves: per source object, a table sending
/// positions in `Hom(G a, b)` to positions in `Hom(G a, b')`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct NerveNatural {
    pub components: Vec<Vec<usize>>,
}

struct NerveProblem<'a> {
    g: &'a FinFunctor,
    /// per source object: the hom list Hom(G a, b)
    from: Vec<Vec<MorId>>,
    /// per source object: the hom list Hom(G a, b')
    to: Vec<Vec<MorId>>,
    from_pos: Vec<HashMap<MorId, usize>>,
    to_pos: Vec<HashMap<MorId, usize>>,
    /// cell order: (object, position in `from[object]`)
    cells: Vec<(usize, usize)>,
    cell_id: HashMap<(usize, usize), usize>,
}

impl<'a> NerveProblem<'a> {
    fn new(g: &'a FinFunctor, b: ObjId, b2: ObjId) -> Self {
        let src = &g.source;
        let tgt = &g.target;
        let n = src.n_objects();
        let mut from = Vec::with_capacity(n);
        let mut to = Vec::with_capacity(n);
        for a in 0..n {
            from.push(tgt.hom(g.on_obj(ObjId(a)), b).to_vec());
            to.push(tgt.hom(g.on_obj(ObjId(a)), b2).to_vec());
        }
        let pos = |lists: &Vec<Vec<MorId>>| {
            lists
                .iter()
                .map(|l| l.iter().enumerate().map(|(i, &m)| (m, i)).collect())
                .collect::<Vec<HashMap<MorId, usize>>>()
        };
        let from_pos = pos(&from);
        let to_pos = pos(&to);
        // Assign cells over objects whose image is b first (their identity
        // cell forces everything that factors through it), then ascending
        // hom-set size.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (g.on_obj(ObjId(a)) != b, from[a].len(), a));
        let mut cells = Vec::new();
        for &a in &order {
            for u in 0..from[a].len() {
                cells.push((a, u));
            }
        }
        let cell_id = cells
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        NerveProblem {
            g,
            from,
            to,
            from_pos,
            to_pos,
            cells,
            cell_id,
        }
    }

    /// Enumerates every natural family, stopping once `cap` families have
    /// been found. Returns `(families, hit_cap)`.
    fn enumerate(&self, cap: usize) -> (Vec<NerveNatural>, bool) {
        let n_cells = self.cells.len();
        let mut assignment: Vec<Option<usize>> = vec![None; n_cells];
        let mut out = Vec::new();
        let mut hit_cap = false;
        self.dfs(0, &mut assignment, cap, &mut out, &mut hit_cap);
        (out, hit_cap)
    }

    fn dfs(
        &self,
        next: usize,
        assignment: &mut Vec<Option<usize>>,
        cap: usize,
        out: &mut Vec<NerveNatural>,
        hit_cap: &mut bool,
    ) {
        if out.len() >= cap {
            *hit_cap = true;
            return;
        }
        let Some(cell) = (next..self.cells.len()).find(|&c| assignment[c].is_none()) else {
            if self.verify(assignment) {
                out.push(self.extract(assignment));
            }
            return;
        };
        let (a, _) = self.cells[cell];
        for v in 0..self.to[a].len() {
            let mut trail = Vec::new();
            if self.assign(cell, v, assignment, &mut trail) {
                self.dfs(cell + 1, assignment, cap, out, hit_cap);
            }
            for c in trail {
                assignment[c] = None;
            }
            if *hit_cap {
                return;
            }
        }
    }

    /// Assigns a cell and propagates along every precomposition; returns
    /// false on conflict.
    fn assign(
        &self,
        cell: usize,
        value: usize,
        assignment: &mut Vec<Option<usize>>,
        trail: &mut Vec<usize>,
    ) -> bool {
        let mut queue = vec![(cell, value)];
        while let Some((c, v)) = queue.pop() {
            match assignment[c] {
                Some(existing) => {
                    if existing != v {
                        return false;
                    }
                    continue;
                }
                None => {
                    assignment[c] = Some(v);
                    trail.push(c);
                }
            }
            let (a, u) = self.cells[c];
            let src = &self.g.source;
            let tgt = &self.g.target;
            let u_mor = self.from[a][u];
            let v_mor = self.to[a][v];
            for a2 in 0..src.n_objects() {
                for &h in src.hom(ObjId(a2), ObjId(a)) {
                    let gh = self.g.on_mor(h);
                    let (Some(u2), Some(v2)) = (tgt.compose(u_mor, gh), tgt.compose(v_mor, gh))
                    else {
                        return false;
                    };
                    let u2_pos = self.from_pos[a2][&u2];
                    let v2_pos = self.to_pos[a2][&v2];
                    queue.push((self.cell_id[&(a2, u2_pos)], v2_pos));
                }
            }
        }
        true
    }

    /// Full naturality verification of a complete assignment.
    fn verify(&self, assignment: &[Option<usize>]) -> bool {
        let src = &self.g.source;
        let tgt = &self.g.target;
        for a in 0..src.n_objects() {
            for u in 0..self.from[a].len() {
                let v = assignment[self.cell_id[&(a, u)]].unwrap();
                for a2 in 0..src.n_objects() {
                    for &h in src.hom(ObjId(a2), ObjId(a)) {
                        let gh = self.g.on_mor(h);
                        let u2 = tgt.compose(self.from[a][u], gh).unwrap();
                        let v2 = tgt.compose(self.to[a][v], gh).unwrap();
                        let lhs = assignment[self.cell_id[&(a2, self.from_pos[a2][&u2])]].unwrap();
                        if self.to[a2][lhs] != v2 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn extract(&self, assignment: &[Option<usize>]) -> NerveNatural {
        let components = (0..self.from.len())
            .map(|a| {
                (0..self.from[a].len())
                    .map(|u| assignment[self.cell_id[&(a, u)]].unwrap())
                    .collect()
            })
            .collect();
        NerveNatural { components }
    }

    /// The natural family induced by postcomposition with `m: b -> b'`.
    fn induced(&self, m: MorId) -> NerveNatural {
        let tgt = &self.g.target;
        let components = (0..self.from.len())
            .map(|a| {
                self.from[a]
                    .iter()
                    .map(|&u| self.to_pos[a][&tgt.compose(m, u).unwrap()])
                    .collect()
            })
            .collect();
        NerveNatural { components }
    }
}

/// Enumerates natural families `Hom(G−, b) -> Hom(G−, b')`, up to `cap`.
pub fn enumerate_nerve_naturals(
    g: &FinFunctor,
    b: ObjId,
    b2: ObjId,
    cap: usize,
) -> (Vec<NerveNatural>, bool) {
    NerveProblem::new(g, b, b2).enumerate(cap)
}

#[derive(Debug, Clone, serde::Serialize)]
pub enum DensityFailure {
    /// Two distinct morphisms of the ambient category induce the same family.
    NotFaithful { pair: (String, String), at: (String, String) },
    /// A natural family between nerves is induced by no morphism.
    NotFull { at: (String, String), family: NerveNatural },
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct DensityReport {
    pub dense: bool,
    pub failures: Vec<DensityFailure>,
    /// Object pairs examined (for reporting).
    pub pairs_checked: usize,
}

/// Checks that the nerve of `g` is fully faithful on the target fragment:
/// for every pair of target objects, morphisms between them correspond
/// bijectively to natural families between their nerves.
///
/// The verdict certifies density relative to the supplied fragments only; no
/// statement about ambient infinite categories is implied.
pub fn check_dense(g: &FinFunctor) -> DensityReport {
    let tgt = &g.target;
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for b in 0..tgt.n_objects() {
        for b2 in 0..tgt.n_objects() {
            let (b, b2) = (ObjId(b), ObjId(b2));
            pairs_checked += 1;
            let problem = NerveProblem::new(g, b, b2);
            let homs = tgt.hom(b, b2);
            let induced: Vec<NerveNatural> =
                homs.iter().map(|&m| problem.induced(m)).collect();
            for i in 0..induced.len() {
                for j in i + 1..induced.len() {
                    if induced[i] == induced[j] {
                        failures.push(DensityFailure::NotFaithful {
                            pair: (
                                tgt.mor_name(homs[i]).to_string(),
                                tgt.mor_name(homs[j]).to_string(),
                            ),
                            at: (tgt.obj_name(b).to_string(), tgt.obj_name(b2).to_string()),
                        });
                    }
                }
            }
            let (all, hit_cap) = problem.enumerate(homs.len() + 1);
            if hit_cap || all.len() > homs.len() {
                // more families than morphisms: at least one is not induced
                let witness = all
                    .into_iter()
                    .find(|fam| !induced.contains(fam))
                    .expect("family count exceeds induced count");
                failures.push(DensityFailure::NotFull {
                    at: (tgt.obj_name(b).to_string(), tgt.obj_name(b2).to_string()),
                    family: witness,
                });
            } else {
                for fam in &all {
                    if !induced.contains(fam) {
                        failures.push(DensityFailure::NotFull {
                            at: (tgt.obj_name(b).to_string(), tgt.obj_name(b2).to_string()),
                            family: fam.clone(),
                        });
                    }
                }
            }
            if failures.len() > 16 {
                return DensityReport {
                    dense: false,
                    failures,
                    pairs_checked,
                };
            }
        }
    }
    DensityReport {
        dense: failures.is_empty(),
        failures,
        pairs_checked,
    }
}

/// Cross-check of density via the colimit formulation: `b` is the colimit of
/// `G ∘ π_b` with the canonical cocone. Intended for categories with few
/// morphisms; enumeration is exhaustive.
pub fn canonical_cocone_is_colimiting(g: &FinFunctor, b: ObjId) -> bool {
    let comma = match comma_category(g, b) {
        Ok(c) => c,
        Err(_) => return false,
    };
    let tgt = &g.target;
    let n_comma = comma.objects.len();
    // incoming comma morphisms per comma object: assigning a leg at the
    // codomain forces the leg at the domain
    let mut incoming: Vec<Vec<(usize, MorId)>> = vec![Vec::new(); n_comma];
    {
        let cc = &comma.category;
        for m in 0..cc.n_morphisms() {
            let m = MorId(m);
            incoming[cc.cod(m).0].push((cc.dom(m).0, comma.projection.on_mor(m)));
        }
    }
    for c in 0..tgt.n_objects() {
        let c = ObjId(c);
        // enumerate cocones of G∘π over apex c
        let value_sets: Vec<Vec<MorId>> = comma
            .objects
            .iter()
            .map(|&(a, _)| tgt.hom(g.on_obj(a), c).to_vec())
            .collect();
        let mut cocones: Vec<Vec<MorId>> = Vec::new();
        let mut current: Vec<Option<MorId>> = vec![None; n_comma];
        enumerate_cocones(g, &comma, tgt, &value_sets, &incoming, &mut current, &mut cocones);
        // cocones must correspond bijectively to morphisms b -> c via the
        // canonical cocone (whose legs are the comma objects themselves)
        let mut induced: Vec<Vec<MorId>> = Vec::new();
        for &u in tgt.hom(b, c) {
            let legs: Option<Vec<MorId>> = comma
                .objects
                .iter()
                .map(|&(_, f)| tgt.compose(u, f))
                .collect();
            match legs {
                Some(l) => induced.push(l),
                None => return false,
            }
        }
        induced.sort();
        let dedup_len = {
            let mut i2 = induced.clone();
            i2.dedup();
            i2.len()
        };
        if dedup_len != induced.len() {
            return false; // canonical map not injective
        }
        cocones.sort();
        if cocones != induced {
            return false; // some cocone does not factor, or factors non-uniquely
        }
    }
    true
}

fn enumerate_cocones(
    g: &FinFunctor,
    comma: &super::CommaCategory,
    tgt: &FinCategory,
    value_sets: &[Vec<MorId>],
    incoming: &[Vec<(usize, MorId)>],
    current: &mut Vec<Option<MorId>>,
    out: &mut Vec<Vec<MorId>>,
) {
    let Some(next) = current.iter().position(|v| v.is_none()) else {
        // verify commutation with every comma morphism
        let cc = &comma.category;
        for m in 0..cc.n_morphisms() {
            let m = MorId(m);
            let (i, j) = (cc.dom(m).0, cc.cod(m).0);
            let h = comma.projection.on_mor(m);
            let lhs = current[i].unwrap();
            let rhs = tgt.compose(current[j].unwrap(), g.on_mor(h));
            if Some(lhs) != rhs {
                return;
            }
        }
        out.push(current.iter().map(|v| v.unwrap()).collect());
        return;
    };
    'values: for &v in &value_sets[next] {
        // assign and propagate through incoming comma morphisms
        let mut trail = Vec::new();
        let mut queue = vec![(next, v)];
        let mut ok = true;
        while let Some((j, vj)) = queue.pop() {
            match current[j] {
                Some(existing) if existing != vj => {
                    ok = false;
                    break;
                }
                Some(_) => continue,
                None => {
                    current[j] = Some(vj);
                    trail.push(j);
                }
            }
            for &(i, h) in &incoming[j] {
                match tgt.compose(vj, g.on_mor(h)) {
                    Some(vi) => queue.push((i, vi)),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                break;
            }
        }
        if ok {
            enumerate_cocones(g, comma, tgt, value_sets, incoming, current, out);
        }
        for j in trail {
            current[j] = None;
        }
        if !ok {
            continue 'values;
        }
    }
}
