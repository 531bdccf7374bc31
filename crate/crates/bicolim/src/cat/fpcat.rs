use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use crate::cat::quiver::{ArrowId, ObjId, PathTerm, Quiver};
use crate::error::{Error, Result};

/// Three-valued answer of a bounded equality query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tri {
    Equal,
    Distinct,
    Unknown,
}

/// Search bounds for the rewriting backend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Maximum length of a normalized path kept during saturation and search.
    pub max_len: usize,
    /// Maximum number of stored morphisms per source object (and per
    /// congruence-class exploration).
    pub max_hom: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_len: 12, max_hom: 5000 }
    }
}

/// Morphism-equality backend of a finitely presented category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend {
    /// Shortlex-oriented ground rewriting plus bounded congruence search;
    /// three-valued.
    Rewrite(Bounds),
    /// Exact composition table; all words reduce to length at most one.
    Table,
}

impl Backend {
    pub fn bounds(&self) -> Bounds {
        match self {
            Backend::Rewrite(b) => *b,
            Backend::Table => Bounds::default(),
        }
    }
}

/// Per-hom-pair saturation outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomStatus {
    /// Exact hom-set size.
    Closed(usize),
    /// A bound was hit before the hom-set stabilized.
    Open,
}

#[derive(Debug, Clone)]
pub struct SaturationReport {
    pub homs: BTreeMap<(ObjId, ObjId), HomStatus>,
    pub closed: bool,
}

#[derive(Debug, Clone)]
struct RepEntry {
    path: PathTerm,
    /// Successor representative (index into the same source's list) after
    /// post-composing with a generator.
    act: BTreeMap<ArrowId, usize>,
}

/// Result of exhaustive hom-set enumeration modulo the congruence.
#[derive(Debug, Clone)]
pub struct Saturation {
    /// Representatives per source object, in discovery (length-first) order.
    reps: Vec<Vec<RepEntry>>,
    closed_sources: Vec<bool>,
    pub report: SaturationReport,
}

impl Saturation {
    pub fn closed(&self) -> bool {
        self.report.closed
    }

    pub fn source_closed(&self, s: ObjId) -> bool {
        self.closed_sources[s.idx()]
    }

    /// Representatives of `Hom(s, t)`, in discovery order.
    pub fn hom(&self, s: ObjId, t: ObjId) -> Vec<&PathTerm> {
        self.reps[s.idx()]
            .iter()
            .map(|r| &r.path)
            .filter(|p| p.tgt == t)
            .collect()
    }

    /// Folds a path through the action table; exact on closed sources.
    fn fold(&self, p: &PathTerm) -> Option<usize> {
        let list = &self.reps[p.src.idx()];
        let mut idx = 0usize; // rep 0 is always the identity at the source
        for &a in &p.arrows {
            idx = *list[idx].act.get(&a)?;
        }
        Some(idx)
    }
}

type Word = Vec<ArrowId>;

#[derive(Debug, Clone)]
struct Rule {
    lhs: Word,
    rhs: Word,
    /// Source object of both sides; needed to apply identity-valued rules.
    src: ObjId,
}

enum ManyEq {
    EqualTo(usize),
    DistinctAll,
    Unknown,
}

fn contains_subword(hay: &[ArrowId], needle: &[ArrowId]) -> bool {
    !needle.is_empty()
        && hay.len() >= needle.len()
        && (0..=(hay.len() - needle.len())).any(|i| hay[i..i + needle.len()] == *needle)
}

/// Rewrites `w` to normal form with the active rules (leftmost match,
/// first rule wins). Terminates because every rule is shortlex-decreasing.
fn nf_word(rules: &[Rule], active: &[bool], w: &Word) -> Word {
    let mut word = w.clone();
    'outer: loop {
        for (rule, &a) in rules.iter().zip(active) {
            if !a || rule.lhs.len() > word.len() {
                continue;
            }
            for i in 0..=(word.len() - rule.lhs.len()) {
                if word[i..i + rule.lhs.len()] == rule.lhs[..] {
                    let mut next = Vec::with_capacity(word.len());
                    next.extend_from_slice(&word[..i]);
                    next.extend_from_slice(&rule.rhs);
                    next.extend_from_slice(&word[i + rule.lhs.len()..]);
                    word = next;
                    continue 'outer;
                }
            }
        }
        break;
    }
    word
}

/// Critical pairs formed by superposing `r1` over `r2`: suffix-prefix
/// overlaps of the left sides and containment of `r2.lhs` in `r1.lhs`.
fn critical_pairs(r1: &Rule, r2: &Rule) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    let (l1, l2) = (&r1.lhs, &r2.lhs);
    for k in 1..l1.len().min(l2.len()) {
        if l1[l1.len() - k..] == l2[..k] {
            let mut a = r1.rhs.clone();
            a.extend_from_slice(&l2[k..]);
            let mut b = l1[..l1.len() - k].to_vec();
            b.extend_from_slice(&r2.rhs);
            out.push((a, b));
        }
    }
    if l2.len() <= l1.len() {
        for i in 0..=(l1.len() - l2.len()) {
            if l1[i..i + l2.len()] == l2[..] {
                let mut b = l1[..i].to_vec();
                b.extend_from_slice(&r2.rhs);
                b.extend_from_slice(&l1[i + l2.len()..]);
                out.push((r1.rhs.clone(), b));
            }
        }
    }
    out
}

/// A finitely presented category: a quiver, parallel-path relations, and an
/// equality backend.
#[derive(Debug, Clone)]
pub struct FpCategory {
    pub quiver: Quiver,
    pub relations: Vec<(PathTerm, PathTerm)>,
    pub backend: Backend,
    rules: Vec<Rule>,
    /// `Some` for the table backend: composite of two generators, `None`
    /// meaning the identity.
    comp_table: Option<HashMap<(ArrowId, ArrowId), Option<ArrowId>>>,
    name_rank: Vec<usize>,
    /// Whether the oriented rule set was completed to confluence, making
    /// normal forms canonical and inequality of normal forms exact.
    confluent: bool,
    sat_cache: OnceLock<Saturation>,
}

impl FpCategory {
    pub fn new(
        quiver: Quiver,
        relations: Vec<(PathTerm, PathTerm)>,
        backend: Backend,
    ) -> Result<Self> {
        for (l, r) in &relations {
            if l.src != r.src || l.tgt != r.tgt {
                return Err(Error::NonParallelRelation(format!(
                    "{} = {}",
                    l.display(&quiver),
                    r.display(&quiver)
                )));
            }
        }
        let name_rank = Self::compute_name_rank(&quiver);
        let mut cat = FpCategory {
            quiver,
            relations,
            backend,
            rules: Vec::new(),
            comp_table: None,
            name_rank,
            confluent: false,
            sat_cache: OnceLock::new(),
        };
        cat.orient_rules();
        cat.complete();
        Ok(cat)
    }

    /// Table-backend constructor; `comp` maps composable generator pairs to
    /// their composite (`None` = identity). Relations are derived from the
    /// table.
    pub fn new_table(
        quiver: Quiver,
        comp: HashMap<(ArrowId, ArrowId), Option<ArrowId>>,
    ) -> Result<Self> {
        let mut relations = Vec::new();
        for (&(f, g), &h) in &comp {
            let lhs = PathTerm::from_arrows(&quiver, vec![f, g])?;
            let rhs = match h {
                Some(h) => PathTerm::single(&quiver, h),
                None => PathTerm::identity(quiver.src(f)),
            };
            if lhs.src != rhs.src || lhs.tgt != rhs.tgt {
                return Err(Error::NonParallelRelation(format!(
                    "table entry {} = {}",
                    lhs.display(&quiver),
                    rhs.display(&quiver)
                )));
            }
            relations.push((lhs, rhs));
        }
        relations.sort();
        let name_rank = Self::compute_name_rank(&quiver);
        let mut cat = FpCategory {
            quiver,
            relations,
            backend: Backend::Table,
            rules: Vec::new(),
            comp_table: Some(comp),
            name_rank,
            confluent: true,
            sat_cache: OnceLock::new(),
        };
        cat.orient_rules();
        Ok(cat)
    }

    fn compute_name_rank(quiver: &Quiver) -> Vec<usize> {
        let mut names: Vec<(String, usize)> = quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.clone(), i))
            .collect();
        names.sort();
        let mut rank = vec![0usize; quiver.arrows.len()];
        for (r, (_, i)) in names.into_iter().enumerate() {
            rank[i] = r;
        }
        rank
    }

    /// Shortlex comparison: length first, ties by lexicographic arrow-name
    /// order.
    fn shortlex(&self, a: &Word, b: &Word) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match a.len().cmp(&b.len()) {
            Ordering::Equal => {
                let ra: Vec<usize> = a.iter().map(|x| self.name_rank[x.idx()]).collect();
                let rb: Vec<usize> = b.iter().map(|x| self.name_rank[x.idx()]).collect();
                ra.cmp(&rb)
            }
            o => o,
        }
    }

    fn orient_rules(&mut self) {
        let mut rules = Vec::new();
        for (l, r) in &self.relations {
            use std::cmp::Ordering;
            let (lhs, rhs) = match self.shortlex(&l.arrows, &r.arrows) {
                Ordering::Greater => (l, r),
                Ordering::Less => (r, l),
                Ordering::Equal => continue, // trivial relation
            };
            rules.push(Rule { lhs: lhs.arrows.clone(), rhs: rhs.arrows.clone(), src: lhs.src });
        }
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs).then(a.rhs.cmp(&b.rhs)));
        rules.dedup_by(|a, b| a.lhs == b.lhs && a.rhs == b.rhs);
        self.rules = rules;
    }

    pub fn bounds(&self) -> Bounds {
        self.backend.bounds()
    }

    /// Whether normal forms are canonical, so that distinct normal forms
    /// are exactly distinct morphisms.
    pub fn is_confluent(&self) -> bool {
        self.confluent
    }

    /// Bounded ground Knuth-Bendix completion of the oriented rule set
    /// under the shortlex reduction order. On success the system is
    /// confluent and normal forms are canonical; on hitting a bound the
    /// partial rule set stays sound but `confluent` remains false.
    fn complete(&mut self) {
        const MAX_RULES: usize = 4000;
        const MAX_EQNS: usize = 40000;
        let len_cap = self.bounds().max_len.saturating_mul(2).max(
            self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0),
        ) + 2;

        let mut rules: Vec<Rule> = std::mem::take(&mut self.rules);
        let mut active: Vec<bool> = vec![true; rules.len()];
        let mut eqns: VecDeque<(Word, Word)> = VecDeque::new();
        let mut processed_eqns = 0usize;
        for i in 0..rules.len() {
            for j in 0..rules.len() {
                for cp in critical_pairs(&rules[i], &rules[j]) {
                    eqns.push_back(cp);
                }
            }
        }
        let mut ok = true;
        while let Some((u, v)) = eqns.pop_front() {
            processed_eqns += 1;
            if processed_eqns > MAX_EQNS {
                ok = false;
                break;
            }
            let nu = nf_word(&rules, &active, &u);
            let nv = nf_word(&rules, &active, &v);
            if nu == nv {
                continue;
            }
            use std::cmp::Ordering;
            let (lhs, rhs) = match self.shortlex(&nu, &nv) {
                Ordering::Greater => (nu, nv),
                Ordering::Less => (nv, nu),
                Ordering::Equal => unreachable!("shortlex is total on distinct words"),
            };
            if lhs.len() > len_cap || rules.iter().zip(&active).filter(|(_, a)| **a).count()
                >= MAX_RULES
            {
                ok = false;
                break;
            }
            let src = self.quiver.src(lhs[0]);
            let new_rule = Rule { lhs, rhs, src };
            let k = rules.len();
            // interreduce: retire rules whose left side the new rule rewrites
            for i in 0..k {
                if !active[i] {
                    continue;
                }
                if contains_subword(&rules[i].lhs, &new_rule.lhs)
                    || contains_subword(&rules[i].rhs, &new_rule.lhs)
                {
                    active[i] = false;
                    eqns.push_back((rules[i].lhs.clone(), rules[i].rhs.clone()));
                }
            }
            rules.push(new_rule);
            active.push(true);
            for i in 0..=k {
                if !active[i] {
                    continue;
                }
                for cp in critical_pairs(&rules[i], &rules[k]) {
                    eqns.push_back(cp);
                }
                if i != k {
                    for cp in critical_pairs(&rules[k], &rules[i]) {
                        eqns.push_back(cp);
                    }
                }
            }
        }
        let mut kept: Vec<Rule> = rules
            .into_iter()
            .zip(active)
            .filter(|(_, a)| *a)
            .map(|(r, _)| r)
            .collect();
        kept.sort_by(|a, b| a.lhs.cmp(&b.lhs).then(a.rhs.cmp(&b.rhs)));
        kept.dedup_by(|a, b| a.lhs == b.lhs && a.rhs == b.rhs);
        self.rules = kept;
        self.confluent = ok;
    }

    /// Normal form of a path under the backend. Idempotent.
    pub fn normalize(&self, p: &PathTerm) -> PathTerm {
        if let Some(table) = &self.comp_table {
            let mut acc: Option<ArrowId> = None;
            for &a in &p.arrows {
                acc = match acc {
                    None => Some(a),
                    Some(b) => match table.get(&(b, a)) {
                        Some(&c) => c,
                        // table is expected total on composable pairs
                        None => Some(a),
                    },
                };
            }
            return match acc {
                None => PathTerm::identity(p.src),
                Some(a) => PathTerm::single(&self.quiver, a),
            };
        }
        let mut word = p.arrows.clone();
        'outer: loop {
            for rule in &self.rules {
                if rule.lhs.len() > word.len() {
                    continue;
                }
                for i in 0..=(word.len() - rule.lhs.len()) {
                    if word[i..i + rule.lhs.len()] == rule.lhs[..] {
                        let mut next = Vec::with_capacity(word.len());
                        next.extend_from_slice(&word[..i]);
                        next.extend_from_slice(&rule.rhs);
                        next.extend_from_slice(&word[i + rule.lhs.len()..]);
                        word = next;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        PathTerm { src: p.src, tgt: p.tgt, arrows: word }
    }

    /// Diagrammatic composite `f;g`, normalized.
    pub fn compose(&self, f: &PathTerm, g: &PathTerm) -> Result<PathTerm> {
        Ok(self.normalize(&f.then(g)?))
    }

    pub fn compose_all(&self, paths: &[PathTerm]) -> Result<PathTerm> {
        let mut acc = match paths.first() {
            None => return Err(Error::Invalid("empty composite".into())),
            Some(p) => p.clone(),
        };
        for p in &paths[1..] {
            acc = acc.then(p)?;
        }
        Ok(self.normalize(&acc))
    }

    fn object_at(&self, p: &PathTerm, i: usize) -> ObjId {
        if i == 0 {
            p.src
        } else {
            self.quiver.tgt(p.arrows[i - 1])
        }
    }

    /// Bounded breadth-first exploration of the congruence class of `start`.
    /// Returns the class and whether it was fully closed within bounds.
    fn class_of(&self, start: &PathTerm, bounds: Bounds) -> (HashSet<Word>, bool) {
        let cap_len = bounds.max_len.max(start.len());
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue: VecDeque<PathTerm> = VecDeque::new();
        let mut closed = true;
        seen.insert(start.arrows.clone());
        queue.push_back(start.clone());
        while let Some(w) = queue.pop_front() {
            for (l, r) in self.relations.iter().flat_map(|(l, r)| [(l, r), (r, l)]) {
                let ll = l.arrows.len();
                if ll > w.arrows.len() {
                    continue;
                }
                for i in 0..=(w.arrows.len() - ll) {
                    let matches = if ll == 0 {
                        self.object_at(&w, i) == l.src
                    } else {
                        w.arrows[i..i + ll] == l.arrows[..]
                    };
                    if !matches {
                        continue;
                    }
                    let new_len = w.arrows.len() - ll + r.arrows.len();
                    if new_len > cap_len {
                        closed = false;
                        continue;
                    }
                    let mut arrows = Vec::with_capacity(new_len);
                    arrows.extend_from_slice(&w.arrows[..i]);
                    arrows.extend_from_slice(&r.arrows);
                    arrows.extend_from_slice(&w.arrows[i + ll..]);
                    if seen.contains(&arrows) {
                        continue;
                    }
                    if seen.len() >= bounds.max_hom {
                        closed = false;
                        continue;
                    }
                    seen.insert(arrows.clone());
                    queue.push_back(PathTerm { src: w.src, tgt: w.tgt, arrows });
                }
            }
        }
        (seen, closed)
    }

    /// Compares `p` against a list of parallel candidates in one sweep.
    fn eq_against_many(&self, p: &PathTerm, candidates: &[&PathTerm]) -> ManyEq {
        let np = self.normalize(p);
        for (i, q) in candidates.iter().enumerate() {
            if self.normalize(q).arrows == np.arrows {
                return ManyEq::EqualTo(i);
            }
        }
        if self.comp_table.is_some() || self.confluent {
            // exact backends: distinct normal forms are distinct morphisms
            return ManyEq::DistinctAll;
        }
        let (class, class_closed) = self.class_of(&np, self.bounds());
        for (i, q) in candidates.iter().enumerate() {
            if class.contains(&self.normalize(q).arrows) {
                return ManyEq::EqualTo(i);
            }
        }
        if class_closed {
            ManyEq::DistinctAll
        } else {
            ManyEq::Unknown
        }
    }

    fn eq_core(&self, f: &PathTerm, g: &PathTerm) -> Tri {
        match self.eq_against_many(f, &[g]) {
            ManyEq::EqualTo(_) => Tri::Equal,
            ManyEq::DistinctAll => Tri::Distinct,
            ManyEq::Unknown => Tri::Unknown,
        }
    }

    /// Decides whether two parallel morphisms are equal in the presented
    /// category. `Equal` and `Distinct` are always sound; `Unknown` is
    /// reported when a bound was hit.
    pub fn morphisms_equal(&self, f: &PathTerm, g: &PathTerm) -> Result<Tri> {
        if f.src != g.src || f.tgt != g.tgt {
            return Err(Error::NotParallel(format!(
                "{} vs {}",
                f.display(&self.quiver),
                g.display(&self.quiver)
            )));
        }
        if self.normalize(f).arrows == self.normalize(g).arrows {
            return Ok(Tri::Equal);
        }
        if let Some(sat) = self.sat_cache.get() {
            if sat.source_closed(f.src) {
                if let (Some(a), Some(b)) = (sat.fold(f), sat.fold(g)) {
                    return Ok(if a == b { Tri::Equal } else { Tri::Distinct });
                }
            }
        }
        Ok(self.eq_core(f, g))
    }

    /// Enumerates all morphisms per hom-pair by composing generators and
    /// quotienting by the congruence, to a fixpoint or a bound.
    pub fn saturate(&self) -> &Saturation {
        self.sat_cache.get_or_init(|| self.compute_saturation())
    }

    fn compute_saturation(&self) -> Saturation {
        let bounds = self.bounds();
        let nobj = self.quiver.objects.len();
        let mut reps: Vec<Vec<RepEntry>> = Vec::with_capacity(nobj);
        let mut closed_sources = vec![true; nobj];
        for s in self.quiver.object_ids() {
            let mut list: Vec<RepEntry> = vec![RepEntry {
                path: PathTerm::identity(s),
                act: BTreeMap::new(),
            }];
            let mut i = 0usize;
            'source: while i < list.len() {
                let tgt = list[i].path.tgt;
                for a in self.quiver.arrows_from(tgt).collect::<Vec<_>>() {
                    let ext = list[i].path.then(&PathTerm::single(&self.quiver, a)).unwrap();
                    let cand = self.normalize(&ext);
                    let parallel: Vec<usize> = (0..list.len())
                        .filter(|&j| list[j].path.tgt == cand.tgt)
                        .collect();
                    let cand_paths: Vec<&PathTerm> =
                        parallel.iter().map(|&j| &list[j].path).collect();
                    match self.eq_against_many(&cand, &cand_paths) {
                        ManyEq::EqualTo(k) => {
                            list[i].act.insert(a, parallel[k]);
                        }
                        ManyEq::DistinctAll => {
                            if cand.len() > bounds.max_len || list.len() >= bounds.max_hom {
                                closed_sources[s.idx()] = false;
                                break 'source;
                            }
                            let idx = list.len();
                            list.push(RepEntry { path: cand, act: BTreeMap::new() });
                            list[i].act.insert(a, idx);
                        }
                        ManyEq::Unknown => {
                            closed_sources[s.idx()] = false;
                            break 'source;
                        }
                    }
                }
                i += 1;
            }
            reps.push(list);
        }
        let mut homs = BTreeMap::new();
        for s in self.quiver.object_ids() {
            for t in self.quiver.object_ids() {
                let status = if closed_sources[s.idx()] {
                    HomStatus::Closed(
                        reps[s.idx()].iter().filter(|r| r.path.tgt == t).count(),
                    )
                } else {
                    HomStatus::Open
                };
                homs.insert((s, t), status);
            }
        }
        let closed = closed_sources.iter().all(|&c| c);
        Saturation {
            reps,
            closed_sources,
            report: SaturationReport { homs, closed },
        }
    }

    /// Requires a fully closed saturation; errors otherwise.
    pub fn require_saturated(&self) -> Result<&Saturation> {
        let sat = self.saturate();
        if sat.closed() {
            Ok(sat)
        } else {
            Err(Error::NotSaturated(
                "hom-set enumeration did not close within bounds".into(),
            ))
        }
    }

    /// All morphisms `s -> t` as representatives; requires closed saturation.
    pub fn hom(&self, s: ObjId, t: ObjId) -> Result<Vec<PathTerm>> {
        let sat = self.require_saturated()?;
        Ok(sat.hom(s, t).into_iter().cloned().collect())
    }

    /// Searches for a two-sided inverse of `p` among saturated morphisms.
    pub fn inverse_of(&self, p: &PathTerm) -> Result<Option<PathTerm>> {
        let sat = self.require_saturated()?;
        for q in sat.hom(p.tgt, p.src) {
            let pq = self.compose(p, q)?;
            let qp = self.compose(q, p)?;
            if self.morphisms_equal(&pq, &PathTerm::identity(p.src))? == Tri::Equal
                && self.morphisms_equal(&qp, &PathTerm::identity(p.tgt))? == Tri::Equal
            {
                return Ok(Some(q.clone()));
            }
        }
        Ok(None)
    }

    pub fn is_invertible(&self, p: &PathTerm) -> Result<bool> {
        Ok(self.inverse_of(p)?.is_some())
    }

    /// Connected components of the object set under zigzags of arrows,
    /// each sorted, listed in order of their smallest member.
    pub fn pi0(&self) -> Vec<Vec<ObjId>> {
        let n = self.quiver.objects.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for a in self.quiver.arrow_ids() {
            let s = find(&mut parent, self.quiver.src(a).idx());
            let t = find(&mut parent, self.quiver.tgt(a).idx());
            parent[s] = t;
        }
        let mut classes: BTreeMap<usize, Vec<ObjId>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            classes.entry(r).or_default().push(ObjId(i as u32));
        }
        let mut out: Vec<Vec<ObjId>> = classes.into_values().collect();
        for c in &mut out {
            c.sort();
        }
        out.sort_by_key(|c| c[0]);
        out
    }

    /// Distinct declared objects reachable from the relation set; used by
    /// validity checks that must surface `Unknown` rather than guess.
    pub fn check_declared_relations(&self) -> Vec<(usize, Tri)> {
        self.relations
            .iter()
            .enumerate()
            .map(|(i, (l, r))| (i, self.morphisms_equal(l, r).unwrap_or(Tri::Unknown)))
            .collect()
    }
}

/// Objects used widely by tests and constructions.
impl FpCategory {
    /// The category with one object and no non-identity morphisms.
    pub fn terminal() -> FpCategory {
        let q = Quiver::new(vec!["pt".into()], vec![]).unwrap();
        FpCategory::new(q, vec![], Backend::Rewrite(Bounds::default())).unwrap()
    }

    /// The empty category.
    pub fn empty() -> FpCategory {
        FpCategory::new(Quiver::default(), vec![], Backend::Rewrite(Bounds::default())).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_cat(relations: bool) -> FpCategory {
        let q = Quiver::new(
            vec!["X".into()],
            vec![("f".into(), "X".into(), "X".into())],
        )
        .unwrap();
        let rels = if relations {
            let f = q.arrow("f").unwrap();
            let ff = PathTerm::from_arrows(&q, vec![f, f]).unwrap();
            vec![(ff, PathTerm::identity(q.obj("X").unwrap()))]
        } else {
            vec![]
        };
        FpCategory::new(q, rels, Backend::Rewrite(Bounds::default())).unwrap()
    }

    #[test]
    fn empty_category_is_legal() {
        let c = FpCategory::empty();
        assert!(c.saturate().closed());
        assert!(c.pi0().is_empty());
    }

    #[test]
    fn z2_loop_saturates_to_two_endos() {
        let c = loop_cat(true);
        let x = c.quiver.obj("X").unwrap();
        let sat = c.require_saturated().unwrap();
        assert_eq!(sat.report.homs[&(x, x)], HomStatus::Closed(2));
    }

    #[test]
    fn free_loop_is_open() {
        let c = loop_cat(false);
        let x = c.quiver.obj("X").unwrap();
        let sat = c.saturate();
        assert!(!sat.closed());
        assert_eq!(sat.report.homs[&(x, x)], HomStatus::Open);
    }

    #[test]
    fn equality_in_quotient() {
        let c = loop_cat(true);
        let f = c.quiver.arrow("f").unwrap();
        let x = c.quiver.obj("X").unwrap();
        let ff = PathTerm::from_arrows(&c.quiver, vec![f, f]).unwrap();
        let id = PathTerm::identity(x);
        assert_eq!(c.morphisms_equal(&ff, &id).unwrap(), Tri::Equal);
        let fp = PathTerm::single(&c.quiver, f);
        assert_eq!(c.morphisms_equal(&fp, &fp).unwrap(), Tri::Equal);
        assert_eq!(c.morphisms_equal(&fp, &id).unwrap(), Tri::Distinct);
    }

    #[test]
    fn free_loop_distinct_normal_forms() {
        let c = loop_cat(false);
        let f = c.quiver.arrow("f").unwrap();
        let x = c.quiver.obj("X").unwrap();
        let ff = PathTerm::from_arrows(&c.quiver, vec![f, f]).unwrap();
        assert_eq!(c.morphisms_equal(&ff, &PathTerm::identity(x)).unwrap(), Tri::Distinct);
    }

    #[test]
    fn normalization_is_idempotent() {
        let c = loop_cat(true);
        let f = c.quiver.arrow("f").unwrap();
        let p = PathTerm::from_arrows(&c.quiver, vec![f, f, f]).unwrap();
        let n1 = c.normalize(&p);
        let n2 = c.normalize(&n1);
        assert_eq!(n1, n2);
        assert_eq!(n1.arrows, vec![f]);
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let q = Quiver::new(
            vec!["X".into(), "Y".into(), "Z".into()],
            vec![
                ("f".into(), "X".into(), "Y".into()),
                ("g".into(), "X".into(), "Z".into()),
            ],
        )
        .unwrap();
        let f = PathTerm::single(&q, q.arrow("f").unwrap());
        let g = PathTerm::single(&q, q.arrow("g").unwrap());
        let err = FpCategory::new(q, vec![(f, g)], Backend::Rewrite(Bounds::default()));
        assert!(matches!(err, Err(Error::NonParallelRelation(_))));
    }

    #[test]
    fn compose_checks_endpoints() {
        let c = loop_cat(false);
        let q = Quiver::new(
            vec!["A".into(), "B".into()],
            vec![("h".into(), "A".into(), "B".into())],
        )
        .unwrap();
        let _ = q;
        let f = PathTerm::single(&c.quiver, c.quiver.arrow("f").unwrap());
        let id = PathTerm::identity(c.quiver.obj("X").unwrap());
        assert_eq!(c.compose(&id, &f).unwrap(), f);
    }

    #[test]
    fn inverse_search() {
        let q = Quiver::new(
            vec!["X".into(), "Y".into()],
            vec![
                ("f".into(), "X".into(), "Y".into()),
                ("g".into(), "Y".into(), "X".into()),
            ],
        )
        .unwrap();
        let f = q.arrow("f").unwrap();
        let g = q.arrow("g").unwrap();
        let x = q.obj("X").unwrap();
        let y = q.obj("Y").unwrap();
        let fg = PathTerm::from_arrows(&q, vec![f, g]).unwrap();
        let gf = PathTerm::from_arrows(&q, vec![g, f]).unwrap();
        let c = FpCategory::new(
            q,
            vec![(fg, PathTerm::identity(x)), (gf, PathTerm::identity(y))],
            Backend::Rewrite(Bounds::default()),
        )
        .unwrap();
        let fp = PathTerm::single(&c.quiver, f);
        let inv = c.inverse_of(&fp).unwrap().unwrap();
        assert_eq!(inv.arrows, vec![g]);
    }
}
