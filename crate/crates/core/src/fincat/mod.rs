//! Finite categories, functors, and natural transformations, stored
//! extensionally: object and morphism lists plus a total composition table.
//!
//! Two composition backends are supported. Small or abstract categories store
//! the table explicitly. Concrete categories (objects carry finite carriers,
//! morphisms carry function tables) compose by table composition plus an
//! index lookup, which keeps categories with millions of composable pairs
//! affordable; the semantics is the same extensional composition.

mod comma;
mod density;
mod equiv;

pub use comma::{comma_category, coslice_category, CommaCategory, CommaDirection};
pub use density::{
    canonical_cocone_is_colimiting, check_dense, enumerate_nerve_naturals, DensityFailure,
    DensityReport, NerveNatural,
};
pub use equiv::{check_equivalence, find_isomorphism, EquivalenceReport};

use crate::util::{compose_tables, identity_table};
use std::collections::HashMap;
use std::sync::Arc;

/// Index of an object in a [`FinCategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

/// Index of a morphism in a [`FinCategory`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorData {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// Composition backend: explicit table, concrete function tables, or the
/// formal reverse of another category.
#[derive(Debug, Clone)]
enum ComposeBackend {
    /// `(g, f) -> g∘f` for every composable pair. Missing entries are
    /// structural errors reported by [`validate`].
    Table(HashMap<(usize, usize), usize>),
    /// Morphisms are function tables between object carriers; composition is
    /// table composition followed by an index lookup.
    Concrete(ConcreteData),
    /// Same objects and morphisms as the inner category with domains and
    /// codomains swapped; composition delegates with arguments flipped.
    OppositeOf(Arc<FinCategory>),
}

#[derive(Debug, Clone)]
pub struct ConcreteData {
    /// Carrier size per object.
    pub carriers: Vec<usize>,
    /// Function table per morphism, `dom carrier -> cod carrier`.
    pub tables: Vec<Vec<usize>>,
    lookup: HashMap<(usize, usize, Vec<usize>), usize>,
}

/// A finite category: explicit objects, morphisms, identities, composition.
#[derive(Debug, Clone)]
pub struct FinCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorData>,
    pub identities: Vec<MorId>,
    backend: ComposeBackend,
    /// `hom_index[dom * n_objects + cod]` lists the morphisms in that hom-set.
    hom_index: Vec<Vec<MorId>>,
}

impl FinCategory {
    fn assemble(
        name: String,
        objects: Vec<String>,
        morphisms: Vec<MorData>,
        identities: Vec<MorId>,
        backend: ComposeBackend,
    ) -> Self {
        let n = objects.len();
        let mut hom_index = vec![Vec::new(); n * n];
        for (i, m) in morphisms.iter().enumerate() {
            hom_index[m.dom.0 * n + m.cod.0].push(MorId(i));
        }
        FinCategory {
            name,
            objects,
            morphisms,
            identities,
            backend,
            hom_index,
        }
    }

    /// Builds a category from an explicit composition table.
    ///
    /// `compose` maps `(g, f)` with `cod(f) = dom(g)` to `g∘f`. Totality and
    /// the axioms are not enforced here; run [`validate`] to obtain a report.
    pub fn from_table(
        name: &str,
        objects: Vec<String>,
        morphisms: Vec<MorData>,
        identities: Vec<MorId>,
        compose: HashMap<(usize, usize), usize>,
    ) -> Self {
        Self::assemble(
            name.to_string(),
            objects,
            morphisms,
            identities,
            ComposeBackend::Table(compose),
        )
    }

    /// Builds a concrete category from carriers and function tables.
    ///
    /// Every object needs an identity table among the morphisms, and the
    /// morphism list must be closed under table composition.
    pub fn from_concrete(
        name: &str,
        objects: Vec<(String, usize)>,
        morphisms: Vec<(String, ObjId, ObjId, Vec<usize>)>,
    ) -> Self {
        let carriers: Vec<usize> = objects.iter().map(|(_, c)| *c).collect();
        let obj_names: Vec<String> = objects.into_iter().map(|(n, _)| n).collect();
        let mut mor_data = Vec::with_capacity(morphisms.len());
        let mut tables = Vec::with_capacity(morphisms.len());
        let mut lookup = HashMap::new();
        for (i, (mname, dom, cod, table)) in morphisms.into_iter().enumerate() {
            lookup.insert((dom.0, cod.0, table.clone()), i);
            mor_data.push(MorData {
                name: mname,
                dom,
                cod,
            });
            tables.push(table);
        }
        let identities = (0..obj_names.len())
            .map(|o| {
                let id = identity_table(carriers[o]);
                MorId(*lookup
                    .get(&(o, o, id))
                    .unwrap_or_else(|| panic!("missing identity table on object {o}")))
            })
            .collect();
        Self::assemble(
            name.to_string(),
            obj_names,
            mor_data,
            identities,
            ComposeBackend::Concrete(ConcreteData {
                carriers,
                tables,
                lookup,
            }),
        )
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn dom(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].dom
    }

    pub fn cod(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].cod
    }

    pub fn identity(&self, o: ObjId) -> MorId {
        self.identities[o.0]
    }

    pub fn mor_name(&self, m: MorId) -> &str {
        &self.morphisms[m.0].name
    }

    pub fn obj_name(&self, o: ObjId) -> &str {
        &self.objects[o.0]
    }

    /// The hom-set `dom -> cod`.
    pub fn hom(&self, dom: ObjId, cod: ObjId) -> &[MorId] {
        &self.hom_index[dom.0 * self.objects.len() + cod.0]
    }

    /// Composite `g∘f` when `cod(f) = dom(g)`; `None` when not composable or
    /// when the table has no entry (a structural defect).
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        if self.cod(f) != self.dom(g) {
            return None;
        }
        match &self.backend {
            ComposeBackend::Table(t) => t
                .get(&(g.0, f.0))
                .copied()
                .filter(|&h| h < self.morphisms.len())
                .map(MorId),
            ComposeBackend::Concrete(c) => {
                let table = compose_tables(&c.tables[g.0], &c.tables[f.0]);
                c.lookup
                    .get(&(self.dom(f).0, self.cod(g).0, table))
                    .copied()
                    .map(MorId)
            }
            ComposeBackend::OppositeOf(inner) => inner.compose(f, g),
        }
    }

    /// Function table of a concrete morphism, if this category is concrete.
    pub fn concrete_table(&self, m: MorId) -> Option<&[usize]> {
        match &self.backend {
            ComposeBackend::Concrete(c) => Some(&c.tables[m.0]),
            _ => None,
        }
    }

    /// Carrier size of an object in a concrete category.
    pub fn concrete_carrier(&self, o: ObjId) -> Option<usize> {
        match &self.backend {
            ComposeBackend::Concrete(c) => Some(c.carriers[o.0]),
            _ => None,
        }
    }

    /// Looks up a concrete morphism by its function table.
    pub fn find_concrete(&self, dom: ObjId, cod: ObjId, table: &[usize]) -> Option<MorId> {
        match &self.backend {
            ComposeBackend::Concrete(c) => c
                .lookup
                .get(&(dom.0, cod.0, table.to_vec()))
                .copied()
                .map(MorId),
            _ => None,
        }
    }

    pub fn is_concrete(&self) -> bool {
        matches!(self.backend, ComposeBackend::Concrete(_))
    }

    /// Number of composable pairs, used to decide whether materializing a
    /// reversed table is affordable.
    fn composable_pairs(&self) -> usize {
        let n = self.objects.len();
        let mut count = 0usize;
        for a in 0..n {
            for b in 0..n {
                let ab = self.hom_index[a * n + b].len();
                for c in 0..n {
                    count += ab * self.hom_index[b * n + c].len();
                }
            }
        }
        count
    }

    /// The opposite category: same objects and morphisms, domains and
    /// codomains swapped, composition reversed. Applying it twice returns a
    /// category structurally equal to the original.
    pub fn opposite(&self) -> FinCategory {
        if let ComposeBackend::OppositeOf(inner) = &self.backend {
            return (**inner).clone();
        }
        let swapped: Vec<MorData> = self
            .morphisms
            .iter()
            .map(|m| MorData {
                name: m.name.clone(),
                dom: m.cod,
                cod: m.dom,
            })
            .collect();
        const TABLE_LIMIT: usize = 2_000_000;
        let backend = match &self.backend {
            ComposeBackend::Table(t) => {
                let rev = t.iter().map(|(&(g, f), &h)| ((f, g), h)).collect();
                ComposeBackend::Table(rev)
            }
            _ if self.composable_pairs() <= TABLE_LIMIT => {
                let mut rev = HashMap::new();
                for g in 0..self.morphisms.len() {
                    for f in 0..self.morphisms.len() {
                        if let Some(h) = self.compose(MorId(g), MorId(f)) {
                            rev.insert((f, g), h.0);
                        }
                    }
                }
                ComposeBackend::Table(rev)
            }
            _ => ComposeBackend::OppositeOf(Arc::new(self.clone())),
        };
        FinCategory::assemble(
            format!("{}^op", self.name),
            self.objects.clone(),
            swapped,
            self.identities.clone(),
            backend,
        )
    }

    /// Structural equality: same objects, morphisms, identities, and the same
    /// composite for every composable pair.
    pub fn structurally_equal(&self, other: &FinCategory) -> bool {
        if self.objects != other.objects
            || self.morphisms != other.morphisms
            || self.identities != other.identities
        {
            return false;
        }
        for g in 0..self.morphisms.len() {
            for f in 0..self.morphisms.len() {
                if self.compose(MorId(g), MorId(f)) != other.compose(MorId(g), MorId(f)) {
                    return false;
                }
            }
        }
        true
    }
}

/// One-object category with only the identity.
pub fn terminal_category() -> FinCategory {
    let mut compose = HashMap::new();
    compose.insert((0, 0), 0);
    FinCategory::from_table(
        "terminal",
        vec!["*".into()],
        vec![MorData {
            name: "id_*".into(),
            dom: ObjId(0),
            cod: ObjId(0),
        }],
        vec![MorId(0)],
        compose,
    )
}

/// Two objects, one non-identity arrow `0 -> 1`.
pub fn walking_arrow() -> FinCategory {
    let morphisms = vec![
        MorData {
            name: "id_0".into(),
            dom: ObjId(0),
            cod: ObjId(0),
        },
        MorData {
            name: "id_1".into(),
            dom: ObjId(1),
            cod: ObjId(1),
        },
        MorData {
            name: "arrow".into(),
            dom: ObjId(0),
            cod: ObjId(1),
        },
    ];
    let mut compose = HashMap::new();
    compose.insert((0, 0), 0);
    compose.insert((1, 1), 1);
    compose.insert((2, 0), 2);
    compose.insert((1, 2), 2);
    FinCategory::from_table(
        "walking-arrow",
        vec!["0".into(), "1".into()],
        morphisms,
        vec![MorId(0), MorId(1)],
        compose,
    )
}

/// Discrete category on `n` objects.
pub fn discrete_category(n: usize) -> FinCategory {
    let objects = (0..n).map(|i| format!("{i}")).collect();
    let morphisms = (0..n)
        .map(|i| MorData {
            name: format!("id_{i}"),
            dom: ObjId(i),
            cod: ObjId(i),
        })
        .collect();
    let compose = (0..n).map(|i| ((i, i), i)).collect();
    FinCategory::from_table(
        "discrete",
        objects,
        morphisms,
        (0..n).map(MorId).collect(),
        compose,
    )
}

/// One-object category from a monoid multiplication table (`table[i][j] = i·j`,
/// element 0 is the unit). The morphism for element `i` is morphism `i`.
pub fn monoid_category(name: &str, table: &[Vec<usize>]) -> FinCategory {
    let n = table.len();
    let morphisms = (0..n)
        .map(|i| MorData {
            name: format!("m{i}"),
            dom: ObjId(0),
            cod: ObjId(0),
        })
        .collect();
    let mut compose = HashMap::new();
    for (i, row) in table.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            // composite g∘f corresponds to multiplying g·f
            compose.insert((i, j), v);
        }
    }
    FinCategory::from_table(
        name,
        vec!["*".into()],
        morphisms,
        vec![MorId(0)],
        compose,
    )
}

/// Category of a preorder: at most one morphism `a -> b`, present iff
/// `leq(a, b)`. `leq` must be reflexive and transitive.
pub fn preorder_category(name: &str, n: usize, leq: impl Fn(usize, usize) -> bool) -> FinCategory {
    let objects = (0..n).map(|i| format!("{i}")).collect();
    let mut morphisms = Vec::new();
    let mut index = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            if leq(a, b) {
                index.insert((a, b), morphisms.len());
                morphisms.push(MorData {
                    name: format!("{a}<={b}"),
                    dom: ObjId(a),
                    cod: ObjId(b),
                });
            }
        }
    }
    let identities = (0..n).map(|i| MorId(index[&(i, i)])).collect();
    let mut compose = HashMap::new();
    for (&(a, b), &f) in &index {
        for (&(b2, c), &g) in &index {
            if b == b2 {
                compose.insert((g, f), index[&(a, c)]);
            }
        }
    }
    FinCategory::from_table(name, objects, morphisms, identities, compose)
}

/// A hom-closed fragment of the category of finite sets: one object per size
/// in `sizes`, morphisms all function tables.
pub fn finite_sets_fragment(sizes: &[usize]) -> FinCategory {
    let objects: Vec<(String, usize)> = sizes.iter().map(|&s| (format!("set{s}"), s)).collect();
    let mut morphisms = Vec::new();
    for (i, &a) in sizes.iter().enumerate() {
        for (j, &b) in sizes.iter().enumerate() {
            for table in crate::util::FunctionTables::new(a, b) {
                morphisms.push((
                    format!("f{}:{}->{}", morphisms.len(), a, b),
                    ObjId(i),
                    ObjId(j),
                    table,
                ));
            }
        }
    }
    FinCategory::from_concrete("finset", objects, morphisms)
}

/// Full validation report: structural defects (missing table entries) are
/// kept apart from axiom violations, and every violation names its witnesses.
#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct ValidationReport {
    pub structural_errors: Vec<String>,
    pub axiom_violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.structural_errors.is_empty() && self.axiom_violations.is_empty()
    }

    fn structural(&mut self, msg: String) {
        self.structural_errors.push(msg);
    }

    fn violation(&mut self, msg: String) {
        self.axiom_violations.push(msg);
    }
}

/// Checks the category axioms: identity assignment, totality of composition
/// on composable pairs, identity laws, domain/codomain of composites, and
/// associativity on all composable triples.
///
/// For concrete categories associativity holds by construction (composition
/// is function composition); what is checked instead is well-formedness of
/// the tables and closure of the morphism list under composition.
pub fn validate_category(cat: &FinCategory) -> ValidationReport {
    let mut report = ValidationReport::default();
    if cat.identities.len() != cat.objects.len() {
        report.structural(format!(
            "category `{}` has {} identity entries for {} objects",
            cat.name,
            cat.identities.len(),
            cat.objects.len()
        ));
        return report;
    }
    for (o, &id) in cat.identities.iter().enumerate() {
        if cat.dom(id) != ObjId(o) || cat.cod(id) != ObjId(o) {
            report.violation(format!(
                "identity `{}` of object `{}` is not an endomorphism of it",
                cat.mor_name(id),
                cat.objects[o]
            ));
        }
    }
    if let ComposeBackend::Concrete(c) = &cat.backend {
        for (i, m) in cat.morphisms.iter().enumerate() {
            let table = &c.tables[i];
            if table.len() != c.carriers[m.dom.0] {
                report.structural(format!(
                    "morphism `{}` table length {} does not match carrier {}",
                    m.name,
                    table.len(),
                    c.carriers[m.dom.0]
                ));
            }
            if table.iter().any(|&v| v >= c.carriers[m.cod.0]) {
                report.structural(format!(
                    "morphism `{}` table leaves the codomain carrier",
                    m.name
                ));
            }
        }
        for (o, &id) in cat.identities.iter().enumerate() {
            if c.tables[id.0] != identity_table(c.carriers[o]) {
                report.violation(format!(
                    "identity of object `{}` is not the identity table",
                    cat.objects[o]
                ));
            }
        }
    }
    let n_mor = cat.morphisms.len();
    let mut missing = 0usize;
    for g in 0..n_mor {
        for f in 0..n_mor {
            let (g, f) = (MorId(g), MorId(f));
            if cat.cod(f) != cat.dom(g) {
                continue;
            }
            match cat.compose(g, f) {
                None => {
                    missing += 1;
                    if missing <= 5 {
                        report.structural(format!(
                            "missing composition entry for `{}` ∘ `{}`",
                            cat.mor_name(g),
                            cat.mor_name(f)
                        ));
                    }
                }
                Some(h) => {
                    if cat.dom(h) != cat.dom(f) || cat.cod(h) != cat.cod(g) {
                        report.violation(format!(
                            "composite `{}` of `{}` ∘ `{}` has wrong endpoints",
                            cat.mor_name(h),
                            cat.mor_name(g),
                            cat.mor_name(f)
                        ));
                    }
                }
            }
        }
    }
    if missing > 5 {
        report.structural(format!("... and {} more missing entries", missing - 5));
    }
    for f in 0..n_mor {
        let f = MorId(f);
        let (l, r) = (cat.identity(cat.cod(f)), cat.identity(cat.dom(f)));
        if cat.compose(l, f) != Some(f) {
            report.violation(format!(
                "left identity law fails for `{}`",
                cat.mor_name(f)
            ));
        }
        if cat.compose(f, r) != Some(f) {
            report.violation(format!(
                "right identity law fails for `{}`",
                cat.mor_name(f)
            ));
        }
    }
    if matches!(cat.backend, ComposeBackend::Table(_)) {
        for h in 0..n_mor {
            for g in 0..n_mor {
                let (h, g) = (MorId(h), MorId(g));
                let Some(hg) = cat.compose(h, g) else { continue };
                for f in 0..n_mor {
                    let f = MorId(f);
                    if cat.cod(f) != cat.dom(g) {
                        continue;
                    }
                    let via_left = cat.compose(hg, f);
                    let via_right = cat.compose(g, f).and_then(|gf| cat.compose(h, gf));
                    if via_left != via_right {
                        report.violation(format!(
                            "associativity fails on the triple (`{}`, `{}`, `{}`)",
                            cat.mor_name(h),
                            cat.mor_name(g),
                            cat.mor_name(f)
                        ));
                    }
                }
            }
        }
    }
    report
}

/// A functor between finite categories, stored as index maps.
#[derive(Debug, Clone)]
pub struct FinFunctor {
    pub name: String,
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
}

impl FinFunctor {
    pub fn new(
        name: &str,
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
    ) -> Self {
        FinFunctor {
            name: name.to_string(),
            source,
            target,
            obj_map,
            mor_map,
        }
    }

    pub fn identity(cat: Arc<FinCategory>) -> Self {
        let obj_map = (0..cat.n_objects()).map(ObjId).collect();
        let mor_map = (0..cat.n_morphisms()).map(MorId).collect();
        FinFunctor::new("id", cat.clone(), cat, obj_map, mor_map)
    }

    pub fn on_obj(&self, o: ObjId) -> ObjId {
        self.obj_map[o.0]
    }

    pub fn on_mor(&self, m: MorId) -> MorId {
        self.mor_map[m.0]
    }
}

/// Checks that a functor preserves identities, endpoints, and composition.
pub fn validate_functor(f: &FinFunctor) -> ValidationReport {
    let mut report = ValidationReport::default();
    let (src, tgt) = (&f.source, &f.target);
    if f.obj_map.len() != src.n_objects() || f.mor_map.len() != src.n_morphisms() {
        report.structural(format!("functor `{}` has incomplete maps", f.name));
        return report;
    }
    for m in 0..src.n_morphisms() {
        let m = MorId(m);
        let fm = f.on_mor(m);
        if tgt.dom(fm) != f.on_obj(src.dom(m)) || tgt.cod(fm) != f.on_obj(src.cod(m)) {
            report.violation(format!(
                "functor `{}` does not preserve the endpoints of `{}`",
                f.name,
                src.mor_name(m)
            ));
        }
    }
    for o in 0..src.n_objects() {
        if f.on_mor(src.identity(ObjId(o))) != tgt.identity(f.on_obj(ObjId(o))) {
            report.violation(format!(
                "functor `{}` does not preserve the identity of `{}`",
                f.name, src.objects[o]
            ));
        }
    }
    for g in 0..src.n_morphisms() {
        for h in 0..src.n_morphisms() {
            let (g, h) = (MorId(g), MorId(h));
            let Some(gh) = src.compose(g, h) else { continue };
            let lhs = f.on_mor(gh);
            let rhs = tgt.compose(f.on_mor(g), f.on_mor(h));
            if Some(lhs) != rhs {
                report.violation(format!(
                    "functor `{}` does not preserve the composite `{}` ∘ `{}`",
                    f.name,
                    src.mor_name(g),
                    src.mor_name(h)
                ));
            }
        }
    }
    report
}

/// A natural transformation between two parallel functors.
#[derive(Debug, Clone)]
pub struct NatTransformation {
    pub name: String,
    pub source: FinFunctor,
    pub target: FinFunctor,
    /// Component per source object, a morphism of the target category.
    pub components: Vec<MorId>,
}

/// Checks the naturality square of every source morphism, plus component
/// endpoints.
pub fn validate_natural(nt: &NatTransformation) -> ValidationReport {
    let mut report = ValidationReport::default();
    let src_cat = &nt.source.source;
    let tgt_cat = &nt.source.target;
    if nt.components.len() != src_cat.n_objects() {
        report.structural(format!(
            "natural transformation `{}` has {} components for {} objects",
            nt.name,
            nt.components.len(),
            src_cat.n_objects()
        ));
        return report;
    }
    for (o, &c) in nt.components.iter().enumerate() {
        let o = ObjId(o);
        if tgt_cat.dom(c) != nt.source.on_obj(o) || tgt_cat.cod(c) != nt.target.on_obj(o) {
            report.violation(format!(
                "component at `{}` has wrong endpoints",
                src_cat.objects[o.0]
            ));
        }
    }
    for m in 0..src_cat.n_morphisms() {
        let m = MorId(m);
        let (a, b) = (src_cat.dom(m), src_cat.cod(m));
        let left = tgt_cat.compose(nt.components[b.0], nt.source.on_mor(m));
        let right = tgt_cat.compose(nt.target.on_mor(m), nt.components[a.0]);
        if left != right || left.is_none() {
            report.violation(format!(
                "naturality square fails at `{}`",
                src_cat.mor_name(m)
            ));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_category_is_valid() {
        assert!(validate_category(&terminal_category()).is_valid());
    }

    #[test]
    fn walking_arrow_is_valid() {
        assert!(validate_category(&walking_arrow()).is_valid());
    }

    #[test]
    fn broken_associativity_is_detected_with_witnesses() {
        // Two objects; f,g: 0 -> 0 and k: 0 -> 1. Corrupt k∘g so that the
        // triple (k, g, f) violates associativity.
        let morphisms = vec![
            MorData { name: "id0".into(), dom: ObjId(0), cod: ObjId(0) },
            MorData { name: "id1".into(), dom: ObjId(1), cod: ObjId(1) },
            MorData { name: "f".into(), dom: ObjId(0), cod: ObjId(0) },
            MorData { name: "k".into(), dom: ObjId(0), cod: ObjId(1) },
            MorData { name: "k2".into(), dom: ObjId(0), cod: ObjId(1) },
        ];
        let mut compose = HashMap::new();
        compose.insert((0, 0), 0);
        compose.insert((1, 1), 1);
        compose.insert((2, 0), 2);
        compose.insert((0, 2), 2);
        compose.insert((2, 2), 2); // f∘f = f
        compose.insert((3, 0), 3);
        compose.insert((1, 3), 3);
        compose.insert((4, 0), 4);
        compose.insert((1, 4), 4);
        compose.insert((3, 2), 4); // k∘f = k2
        compose.insert((4, 2), 3); // k2∘f = k — so (k∘f)∘f = k ≠ k2 = k∘(f∘f)
        let cat = FinCategory::from_table(
            "broken",
            vec!["0".into(), "1".into()],
            morphisms,
            vec![MorId(0), MorId(1)],
            compose,
        );
        let report = validate_category(&cat);
        assert!(!report.is_valid());
        assert!(report
            .axiom_violations
            .iter()
            .any(|v| v.contains("associativity") && v.contains("`f`")));
    }

    #[test]
    fn identity_functor_is_valid() {
        let cat = Arc::new(finite_sets_fragment(&[0, 1, 2]));
        assert!(validate_category(&cat).is_valid());
        assert!(validate_functor(&FinFunctor::identity(cat)).is_valid());
    }

    #[test]
    fn opposite_of_monoid_swaps_multiplication() {
        // Non-commutative 3-element monoid: unit e, plus a, b with
        // a·a = a, a·b = a, b·a = b, b·b = b (left projection).
        let table = vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]];
        let m = monoid_category("m", &table);
        assert!(validate_category(&m).is_valid());
        let op = m.opposite();
        assert!(validate_category(&op).is_valid());
        // a∘b = a·b = a in m, but a∘b = b·a = b in m^op.
        assert_eq!(m.compose(MorId(1), MorId(2)), Some(MorId(1)));
        assert_eq!(op.compose(MorId(1), MorId(2)), Some(MorId(2)));
    }

    #[test]
    fn opposite_of_walking_arrow_reverses_it() {
        let op = walking_arrow().opposite();
        assert!(validate_category(&op).is_valid());
        assert_eq!(op.dom(MorId(2)), ObjId(1));
        assert_eq!(op.cod(MorId(2)), ObjId(0));
    }

    #[test]
    fn opposite_is_an_involution() {
        // Random-ish 4-object category: the preorder of divisibility on
        // {1,2,3,6} plus the discrete sets fragment.
        let cat = preorder_category("div", 4, |a, b| {
            let v = [1usize, 2, 3, 6];
            v[b] % v[a] == 0
        });
        assert!(validate_category(&cat).is_valid());
        assert!(cat.opposite().opposite().structurally_equal(&cat));
        let sets = finite_sets_fragment(&[0, 1, 2]);
        assert!(sets.opposite().opposite().structurally_equal(&sets));
    }

    #[test]
    fn corrupting_a_table_entry_is_detected() {
        let mut compose = HashMap::new();
        compose.insert((0, 0), 0);
        compose.insert((1, 1), 1);
        compose.insert((2, 0), 2);
        // missing (1,2): id1 ∘ arrow
        let cat = FinCategory::from_table(
            "gap",
            vec!["0".into(), "1".into()],
            vec![
                MorData { name: "id0".into(), dom: ObjId(0), cod: ObjId(0) },
                MorData { name: "id1".into(), dom: ObjId(1), cod: ObjId(1) },
                MorData { name: "a".into(), dom: ObjId(0), cod: ObjId(1) },
            ],
            vec![MorId(0), MorId(1)],
            compose,
        );
        let report = validate_category(&cat);
        assert!(!report.structural_errors.is_empty());
    }

    #[test]
    fn finite_sets_fragment_counts() {
        let cat = finite_sets_fragment(&[0, 1, 2, 3]);
        // morphisms: sum over (a,b) of b^a with 0^0 = 1
        let expected: usize = [0usize, 1, 2, 3]
            .iter()
            .flat_map(|&a| [0usize, 1, 2, 3].iter().map(move |&b| b.pow(a as u32)))
            .sum();
        assert_eq!(cat.n_morphisms(), expected);
        assert!(validate_category(&cat).is_valid());
    }
}
