//! Exact 0/1 integer programming over the GP graph: minimize the number of
//! selected relations subject to edge/endpoint consistency, at most one
//! edge per node pair, the tree count equation, and exact coverage of every
//! unknown solid. Two engines share the model:
//!
//! * a generic branch-and-bound over the explicit binary program with lazy
//!   connectivity repair (the four constraint families admit one tree plus
//!   disjoint cyclic components; cuts exclude the cycles), used for small
//!   materialized graphs; and
//! * an iterative-deepening growth engine that extends partial trees one
//!   demand-covering edge at a time, used for full-size instances. A valid
//!   tree with an edge covering no demand splits into a smaller valid tree,
//!   so growing along demands preserves exact minimality.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::certificate::{positivity_check, Certificate, Positivity};
use crate::gpgraph::{Edge, GpGraph, NodeId, TreeSelection};
use crate::solids::SolidId;

/// Search budgets. `seed` only affects downstream verification sampling;
/// the solvers themselves are deterministic.
#[derive(Debug, Clone)]
pub struct SearchLimits {
    pub max_nodes: usize,
    pub time_limit: Duration,
    /// Exhaust every smaller size before accepting a certificate. When
    /// false, a certificate found by the restricted first phase is
    /// returned immediately as `Feasible`.
    pub prove_optimal: bool,
    pub seed: u64,
    /// Run the positive-usable/elimination-sign-+1 subgraph first as a
    /// find-first phase.
    pub strict_first: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_nodes: 8,
            time_limit: Duration::from_secs(600),
            prove_optimal: true,
            seed: 0,
            strict_first: true,
        }
    }
}

#[derive(Debug, Clone)]
pub enum SolveOutcome {
    /// Proven minimum node count.
    Optimal(TreeSelection),
    /// Valid tree found, minimality not proven within the limits.
    Feasible(TreeSelection),
    /// No tree within `max_nodes`.
    Infeasible,
    TimedOut,
}

impl SolveOutcome {
    pub fn selection(&self) -> Option<&TreeSelection> {
        match self {
            SolveOutcome::Optimal(s) | SolveOutcome::Feasible(s) => Some(s),
            _ => None,
        }
    }

    pub fn status_name(&self) -> &'static str {
        match self {
            SolveOutcome::Optimal(_) => "optimal",
            SolveOutcome::Feasible(_) => "feasible",
            SolveOutcome::Infeasible => "infeasible",
            SolveOutcome::TimedOut => "timed-out",
        }
    }
}

// ---------------------------------------------------------------------------
// Explicit integer program
// ---------------------------------------------------------------------------

/// Graph data the integer program actually consumes: nodes, their unknown
/// solids, and the colored edges. Decoupled from relations so synthetic
/// instances can exercise the solver.
#[derive(Debug, Clone)]
pub struct IpInstance {
    pub node_count: usize,
    pub node_unknowns: Vec<Vec<SolidId>>,
    pub edges: Vec<Edge>,
}

impl IpInstance {
    pub fn from_graph(graph: &GpGraph) -> Option<Self> {
        let edges = graph.edges()?.to_vec();
        let st = graph.solid_table();
        let node_unknowns = graph
            .nodes()
            .iter()
            .map(|r| r.unknown_solids(st))
            .collect();
        Some(Self {
            node_count: graph.nodes().len(),
            node_unknowns,
            edges,
        })
    }
}

/// A linear row lo ≤ Σ coeff·x ≤ hi over binary variables.
#[derive(Debug, Clone)]
pub struct Row {
    pub terms: Vec<(u32, i32)>,
    pub lo: i64,
    pub hi: i64,
}

/// The explicit model: node variables first, then edge variables, the four
/// four constraint families, and a pool of lazily added cuts.
#[derive(Debug, Clone)]
pub struct IpModel {
    pub instance: IpInstance,
    pub rows: Vec<Row>,
    pub cut_pool: Vec<Row>,
    /// Flagged when the model was built from an empty graph and is
    /// therefore trivially infeasible.
    pub trivially_infeasible: bool,
}

const NO_LO: i64 = i64::MIN / 4;

/// Builds the integer program: minimize Σ x_Γ subject to, for each node
/// pair with parallel edges e, 2·Σ x_e ≤ x_Γ + x_Γ' and Σ x_e ≤ 1; the tree
/// equation 1 + Σ x_e = Σ x_Γ; and Σ (edges at Γ colored π) x_e = x_Γ for
/// each unknown solid π of each node Γ.
pub fn build_ip(instance: IpInstance) -> IpModel {
    let nv = instance.node_count;
    let evar = |e: usize| (nv + e) as u32;
    let mut rows = Vec::new();

    let mut by_pair: HashMap<(NodeId, NodeId), Vec<usize>> = HashMap::new();
    for (ei, e) in instance.edges.iter().enumerate() {
        by_pair.entry((e.a.min(e.b), e.a.max(e.b))).or_default().push(ei);
    }
    let mut pairs: Vec<_> = by_pair.into_iter().collect();
    pairs.sort();
    for ((a, b), edges) in pairs {
        let mut ggc: Vec<(u32, i32)> = edges.iter().map(|&ei| (evar(ei), 2)).collect();
        ggc.push((a, -1));
        ggc.push((b, -1));
        rows.push(Row {
            terms: ggc,
            lo: NO_LO,
            hi: 0,
        });
        rows.push(Row {
            terms: edges.iter().map(|&ei| (evar(ei), 1)).collect(),
            lo: NO_LO,
            hi: 1,
        });
    }

    let mut tree: Vec<(u32, i32)> = (0..nv).map(|i| (i as u32, 1)).collect();
    tree.extend((0..instance.edges.len()).map(|ei| (evar(ei), -1)));
    rows.push(Row {
        terms: tree,
        lo: 1,
        hi: 1,
    });

    for (ni, unknowns) in instance.node_unknowns.iter().enumerate() {
        for &color in unknowns {
            let mut terms: Vec<(u32, i32)> = instance
                .edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.color == color && (e.a as usize == ni || e.b as usize == ni))
                .map(|(ei, _)| (evar(ei), 1))
                .collect();
            terms.push((ni as u32, -1));
            rows.push(Row {
                terms,
                lo: 0,
                hi: 0,
            });
        }
    }

    IpModel {
        trivially_infeasible: instance.node_count == 0,
        instance,
        rows,
        cut_pool: Vec::new(),
    }
}

/// An integer assignment restricted to the selected nodes and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSelection {
    pub nodes: Vec<NodeId>,
    pub edges: Vec<Edge>,
}

/// Structural tree check on index selections: connected, |V| = |E|+1, at
/// most one edge per pair, exact unknown coverage.
pub fn index_tree_check(instance: &IpInstance, sel: &IndexSelection) -> Result<(), String> {
    if sel.nodes.is_empty() {
        return Err("empty selection".into());
    }
    if sel.edges.len() + 1 != sel.nodes.len() {
        return Err("|V| != |E|+1".into());
    }
    let pos: HashMap<NodeId, usize> = sel.nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let mut adj = vec![Vec::new(); sel.nodes.len()];
    let mut pair_seen = std::collections::BTreeSet::new();
    for e in &sel.edges {
        let (Some(&a), Some(&b)) = (pos.get(&e.a), pos.get(&e.b)) else {
            return Err("edge endpoint not selected".into());
        };
        if a == b {
            return Err("self-loop".into());
        }
        if !pair_seen.insert((a.min(b), a.max(b))) {
            return Err("parallel edges selected".into());
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; sel.nodes.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != sel.nodes.len() {
        return Err("disconnected".into());
    }
    for &n in sel.nodes.iter() {
        for &color in &instance.node_unknowns[n as usize] {
            let covered = sel
                .edges
                .iter()
                .filter(|e| e.color == color && (e.a == n || e.b == n))
                .count();
            if covered != 1 {
                return Err(format!("unknown coverage {covered} != 1"));
            }
        }
    }
    Ok(())
}

/// Cuts excluding every cyclic component of a selection that satisfies the
/// linear constraints but is not a tree: for a component with edge set E_C
/// on nodes V_C, require Σ_{e∈E_C} x_e ≤ |V_C| - 1.
pub fn cycle_repair(model: &IpModel, sel: &IndexSelection) -> Vec<Row> {
    let nv = model.instance.node_count;
    let mut comp: HashMap<NodeId, usize> = HashMap::new();
    let mut adj: HashMap<NodeId, Vec<NodeId>> = HashMap::new();
    for e in &sel.edges {
        adj.entry(e.a).or_default().push(e.b);
        adj.entry(e.b).or_default().push(e.a);
    }
    let mut ncomp = 0;
    for &n in &sel.nodes {
        if comp.contains_key(&n) {
            continue;
        }
        let mut stack = vec![n];
        comp.insert(n, ncomp);
        while let Some(v) = stack.pop() {
            for &w in adj.get(&v).into_iter().flatten() {
                if let std::collections::hash_map::Entry::Vacant(e) = comp.entry(w) {
                    e.insert(ncomp);
                    stack.push(w);
                }
            }
        }
        ncomp += 1;
    }
    let mut cuts = Vec::new();
    for c in 0..ncomp {
        let nodes: Vec<NodeId> = sel
            .nodes
            .iter()
            .copied()
            .filter(|n| comp[n] == c)
            .collect();
        let edge_ids: Vec<usize> = model
            .instance
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                sel.edges.iter().any(|se| se == *e) && comp.get(&e.a) == Some(&c)
            })
            .map(|(ei, _)| ei)
            .collect();
        if edge_ids.len() >= nodes.len() {
            cuts.push(Row {
                terms: edge_ids.iter().map(|&ei| ((nv + ei) as u32, 1)).collect(),
                lo: NO_LO,
                hi: nodes.len() as i64 - 1,
            });
        }
    }
    cuts
}

/// Branch-and-bound outcome at the index level.
#[derive(Debug, Clone)]
pub enum IndexOutcome {
    Optimal(IndexSelection),
    Feasible(IndexSelection),
    Infeasible,
    TimedOut,
}

/// Exact DFS branch-and-bound with bounds propagation over the explicit
/// model. Integer candidates violating tree-ness trigger lazy cycle cuts
/// and are never accepted.
pub fn solve_bnb(model: &mut IpModel, limits: &SearchLimits) -> IndexOutcome {
    solve_bnb_impl(model, limits, false)
}

/// Branching variant that tries x = 1 first, visiting dense assignments
/// (cyclic candidates included) before sparse ones; exercises the lazy
/// repair path deterministically in tests.
pub fn solve_bnb_one_first(model: &mut IpModel, limits: &SearchLimits) -> IndexOutcome {
    solve_bnb_impl(model, limits, true)
}

fn solve_bnb_impl(model: &mut IpModel, limits: &SearchLimits, one_first: bool) -> IndexOutcome {
    if model.trivially_infeasible {
        return IndexOutcome::Infeasible;
    }
    let nv = model.instance.node_count;
    let ne = model.instance.edges.len();
    let nvar = nv + ne;
    let deadline = Instant::now() + limits.time_limit;

    struct Dfs<'m> {
        model: &'m mut IpModel,
        nv: usize,
        assign: Vec<i8>,
        best: Option<(usize, IndexSelection)>,
        timed_out: bool,
        deadline: Instant,
        steps: u64,
        max_nodes: usize,
        one_first: bool,
    }

    impl Dfs<'_> {
        fn row_ok(&self, row: &Row) -> Option<bool> {
            // Returns Some(feasible) when fully decided, None otherwise.
            let mut min = 0i64;
            let mut max = 0i64;
            for &(v, c) in &row.terms {
                match self.assign[v as usize] {
                    -1 => {
                        if c > 0 {
                            max += c as i64;
                        } else {
                            min += c as i64;
                        }
                    }
                    x => {
                        min += (c as i64) * x as i64;
                        max += (c as i64) * x as i64;
                    }
                }
            }
            if min > row.hi || max < row.lo {
                return Some(false);
            }
            if min >= row.lo && max <= row.hi {
                return Some(true);
            }
            None
        }

        /// Fixes variables forced by single-row bounds. Returns false on
        /// conflict.
        fn propagate(&mut self) -> Result<Vec<u32>, ()> {
            let mut fixed = Vec::new();
            loop {
                let mut changed = false;
                for ri in 0..self.model.rows.len() + self.model.cut_pool.len() {
                    let row = if ri < self.model.rows.len() {
                        self.model.rows[ri].clone()
                    } else {
                        self.model.cut_pool[ri - self.model.rows.len()].clone()
                    };
                    let mut min = 0i64;
                    let mut max = 0i64;
                    for &(v, c) in &row.terms {
                        match self.assign[v as usize] {
                            -1 => {
                                if c > 0 {
                                    max += c as i64;
                                } else {
                                    min += c as i64;
                                }
                            }
                            x => {
                                min += (c as i64) * x as i64;
                                max += (c as i64) * x as i64;
                            }
                        }
                    }
                    if min > row.hi || max < row.lo {
                        for v in &fixed {
                            self.assign[*v as usize] = -1;
                        }
                        return Err(());
                    }
                    for &(v, c) in &row.terms {
                        if self.assign[v as usize] != -1 {
                            continue;
                        }
                        let (lo1, hi1) = if c > 0 {
                            (min + c as i64, max)
                        } else {
                            (min, max + c as i64)
                        };
                        // Setting v=1 shifts the activity range to [lo1,hi1].
                        if lo1 > row.hi || hi1 < row.lo {
                            self.assign[v as usize] = 0;
                            fixed.push(v);
                            changed = true;
                        } else {
                            // Setting v=0: range becomes [min - min(0,c), max - max(0,c)].
                            let (lo0, hi0) = if c > 0 {
                                (min, max - c as i64)
                            } else {
                                (min - c as i64, max)
                            };
                            if lo0 > row.hi || hi0 < row.lo {
                                self.assign[v as usize] = 1;
                                fixed.push(v);
                                changed = true;
                            }
                        }
                    }
                }
                if !changed {
                    return Ok(fixed);
                }
            }
        }

        fn objective_lb(&self) -> usize {
            let ones = self.assign[..self.nv].iter().filter(|&&x| x == 1).count();
            let edge_ones = self.assign[self.nv..].iter().filter(|&&x| x == 1).count();
            ones.max(1 + edge_ones)
        }

        fn extract(&self) -> IndexSelection {
            IndexSelection {
                nodes: (0..self.nv)
                    .filter(|&i| self.assign[i] == 1)
                    .map(|i| i as NodeId)
                    .collect(),
                edges: self
                    .model
                    .instance
                    .edges
                    .iter()
                    .enumerate()
                    .filter(|(ei, _)| self.assign[self.nv + ei] == 1)
                    .map(|(_, e)| *e)
                    .collect(),
            }
        }

        fn dfs(&mut self) {
            self.steps += 1;
            if self.steps.is_multiple_of(1024) && Instant::now() > self.deadline {
                self.timed_out = true;
                return;
            }
            if self.timed_out {
                return;
            }
            let Ok(fixed) = self.propagate() else { return };
            let lb = self.objective_lb();
            let prune = match &self.best {
                Some((obj, _)) => lb >= *obj,
                None => lb > self.max_nodes,
            };
            if prune {
                for v in fixed {
                    self.assign[v as usize] = -1;
                }
                return;
            }
            let branch_var = (0..self.assign.len()).find(|&v| self.assign[v] == -1);
            match branch_var {
                None => {
                    // Full assignment satisfying all rows: candidate.
                    let all_ok = self
                        .model
                        .rows
                        .iter()
                        .chain(self.model.cut_pool.iter())
                        .all(|r| self.row_ok(r) == Some(true));
                    if all_ok {
                        let sel = self.extract();
                        if index_tree_check(&self.model.instance, &sel).is_ok() {
                            let obj = sel.nodes.len();
                            let better = match &self.best {
                                Some((b, _)) => obj < *b,
                                None => obj <= self.max_nodes,
                            };
                            if better {
                                self.best = Some((obj, sel));
                            }
                        } else {
                            let cuts = cycle_repair(self.model, &sel);
                            self.model.cut_pool.extend(cuts);
                        }
                    }
                }
                Some(v) => {
                    let order = if self.one_first { [1, 0] } else { [0, 1] };
                    for val in order {
                        self.assign[v] = val;
                        self.dfs();
                        if self.timed_out {
                            break;
                        }
                    }
                    self.assign[v] = -1;
                }
            }
            for v in fixed {
                self.assign[v as usize] = -1;
            }
        }
    }

    let mut dfs = Dfs {
        model,
        nv,
        assign: vec![-1; nvar],
        best: None,
        timed_out: false,
        deadline,
        steps: 0,
        max_nodes: limits.max_nodes,
        one_first,
    };
    dfs.dfs();
    let timed_out = dfs.timed_out;
    match dfs.best.take() {
        Some((_, sel)) if timed_out => IndexOutcome::Feasible(sel),
        Some((_, sel)) => IndexOutcome::Optimal(sel),
        None if timed_out => IndexOutcome::TimedOut,
        None => IndexOutcome::Infeasible,
    }
}

// ---------------------------------------------------------------------------
// Growth engine
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Default)]
pub struct GrowStats {
    pub states_explored: u64,
    pub trees_yielded: u64,
    /// Trees yielded per level (index 0 = size 1).
    pub yielded_by_level: Vec<u64>,
    pub levels_exhausted: usize,
    pub timed_out: bool,
}

enum Walk {
    Continue,
    Stop,
    TimedOut,
}

/// Edge list of a candidate tree: (color, node position, node position).
pub type TreeEdges = [(SolidId, usize, usize)];

type TreeVisitor<'v> = dyn FnMut(&[NodeId], &TreeEdges) -> bool + 'v;
type TreeCheck<'v> = dyn Fn(&[NodeId], &TreeEdges) -> bool + Sync + 'v;

/// Immutable search context shared by sequential and parallel sweeps: the
/// graph, each node's unknown solids, and per-color candidate lists.
struct GrowCtx<'g, 'a, 'cx> {
    graph: &'g GpGraph<'a, 'cx>,
    unknowns: Vec<Vec<SolidId>>,
    candidates: HashMap<SolidId, Vec<NodeId>>,
    strict: bool,
    /// Restrict to +Γ nodes. Sound for exhaustion: flipping any node sign
    /// flips every monomial of the final polynomial exactly once (each
    /// relation contributes one bracket per monomial), so all 2^k sign
    /// variants of a tree share the same polynomial up to global sign, and
    /// demand edges are always colored by unknown solids whose term signs
    /// stay indeterminate under flips.
    canonical_signs: bool,
}

/// Per-worker mutable search state.
struct GrowLocal {
    tree_nodes: Vec<NodeId>,
    tree_edges: Vec<(SolidId, usize, usize)>,
    open: Vec<(usize, SolidId)>,
    states: u64,
    yielded: u64,
    deadline: Instant,
}

impl<'g, 'a, 'cx> GrowCtx<'g, 'a, 'cx> {
    fn new(graph: &'g GpGraph<'a, 'cx>, strict: bool) -> Self {
        let canonical_signs = !strict;
        let st = graph.solid_table();
        let unknowns: Vec<Vec<SolidId>> = graph
            .nodes()
            .iter()
            .map(|r| r.unknown_solids(st))
            .collect();
        let mut candidates: HashMap<SolidId, Vec<NodeId>> = HashMap::new();
        for u in unknowns.iter().flatten() {
            candidates.entry(*u).or_default();
        }
        for (color, list) in candidates.iter_mut() {
            let mut out: Vec<NodeId> = graph
                .incidences(*color)
                .iter()
                .map(|&(n, _)| n)
                .filter(|&n| !canonical_signs || graph.node(n).sign > 0)
                .collect();
            out.sort_unstable();
            out.dedup();
            *list = out;
        }
        Self {
            graph,
            unknowns,
            candidates,
            strict,
            canonical_signs,
        }
    }

    fn is_twin(&self, a: NodeId, b: NodeId) -> bool {
        let ra = self.graph.node(a);
        let rb = self.graph.node(b);
        ra.s == rb.s && ra.quad == rb.quad
    }

    fn usable_extension(&self, attach: NodeId, cand: NodeId, color: SolidId) -> bool {
        if self.is_twin(attach, cand) {
            return false;
        }
        if !self.strict {
            return true;
        }
        if !self.graph.positive_usable(cand) {
            return false;
        }
        let ta = self.graph.node(attach).term_with(color);
        let tc = self.graph.node(cand).term_with(color);
        match (ta, tc) {
            (Some(ta), Some(tc)) => ta.coeff == -tc.coeff,
            _ => false,
        }
    }

    fn root_usable(&self, root: NodeId, k: usize) -> bool {
        self.unknowns[root as usize].len() < k
            && (!self.strict || self.graph.positive_usable(root))
            && (!self.canonical_signs || self.graph.node(root).sign > 0)
    }

    /// Explores all demand-grown trees of exactly `k` nodes rooted at
    /// `root` (their lexicographically smallest node).
    fn dfs_root(
        &self,
        root: NodeId,
        k: usize,
        local: &mut GrowLocal,
        visit: &mut TreeVisitor,
    ) -> Walk {
        local.tree_nodes.clear();
        local.tree_edges.clear();
        local.open.clear();
        local.tree_nodes.push(root);
        local
            .open
            .extend(self.unknowns[root as usize].iter().map(|&c| (0usize, c)));
        self.dfs(root, k, local, visit)
    }

    fn dfs(
        &self,
        root: NodeId,
        k: usize,
        local: &mut GrowLocal,
        visit: &mut TreeVisitor,
    ) -> Walk {
        local.states += 1;
        if local.states.is_multiple_of(8192) && Instant::now() > local.deadline {
            return Walk::TimedOut;
        }
        if local.open.is_empty() {
            if local.tree_nodes.len() == k {
                local.yielded += 1;
                if visit(&local.tree_nodes, &local.tree_edges) {
                    return Walk::Stop;
                }
            }
            return Walk::Continue;
        }
        if local.tree_nodes.len() + local.open.len() > k {
            return Walk::Continue;
        }
        // Fail-first: expand the open demand with the fewest usable
        // candidates; ties break on open-list position.
        let mut pick = usize::MAX;
        let mut pick_count = usize::MAX;
        for (oi, &(pos, color)) in local.open.iter().enumerate() {
            let attach = local.tree_nodes[pos];
            let cands = &self.candidates[&color];
            let from = cands.partition_point(|&c| c <= root);
            let count = cands[from..]
                .iter()
                .filter(|&&cand| {
                    !local.tree_nodes.contains(&cand)
                        && self.usable_extension(attach, cand, color)
                })
                .count();
            if count < pick_count {
                pick = oi;
                pick_count = count;
                if count == 0 {
                    break;
                }
            }
        }
        if pick_count == 0 {
            return Walk::Continue;
        }
        let (pos, color) = local.open.remove(pick);
        let attach = local.tree_nodes[pos];
        let cands = &self.candidates[&color];
        let from = cands.partition_point(|&c| c <= root);
        for &cand in &cands[from..] {
            if local.tree_nodes.contains(&cand) || !self.usable_extension(attach, cand, color) {
                continue;
            }
            let new_pos = local.tree_nodes.len();
            local.tree_nodes.push(cand);
            local.tree_edges.push((color, pos, new_pos));
            let before = local.open.len();
            let added: Vec<(usize, SolidId)> = self.unknowns[cand as usize]
                .iter()
                .filter(|&&c| c != color)
                .map(|&c| (new_pos, c))
                .collect();
            local.open.extend(added);
            let walk = self.dfs(root, k, local, visit);
            local.open.truncate(before);
            local.tree_edges.pop();
            local.tree_nodes.pop();
            match walk {
                Walk::Continue => {}
                other => {
                    local.open.insert(pick, (pos, color));
                    return other;
                }
            }
        }
        local.open.insert(pick, (pos, color));
        Walk::Continue
    }

    fn materialize(&self, nodes: &[NodeId], edges: &[(SolidId, usize, usize)]) -> TreeSelection {
        TreeSelection {
            nodes: nodes.iter().map(|&n| self.graph.node(n).clone()).collect(),
            edges: edges.to_vec(),
        }
    }
}

/// Outcome of a (possibly parallel) exhaustion of one level.
struct LevelSweep {
    any_accepted: bool,
    states: u64,
    yielded: u64,
    timed_out: bool,
}

/// Sweeps one level with work-stealing workers. `check` must be pure
/// (thread-safe); acceptance of any tree stops the sweep early.
fn sweep_level(
    ctx: &GrowCtx,
    k: usize,
    deadline: Instant,
    threads: usize,
    check: &TreeCheck<'_>,
) -> LevelSweep {
    use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};
    let next_root = AtomicU32::new(0);
    let stop = AtomicBool::new(false);
    let accepted = AtomicBool::new(false);
    let timed_out = AtomicBool::new(false);
    let states = AtomicU64::new(0);
    let yielded = AtomicU64::new(0);
    let node_count = ctx.graph.nodes().len() as u32;

    std::thread::scope(|scope| {
        for _ in 0..threads.max(1) {
            scope.spawn(|| {
                let mut local = GrowLocal {
                    tree_nodes: Vec::new(),
                    tree_edges: Vec::new(),
                    open: Vec::new(),
                    states: 0,
                    yielded: 0,
                    deadline,
                };
                loop {
                    if stop.load(Ordering::Relaxed) {
                        break;
                    }
                    let root = next_root.fetch_add(1, Ordering::Relaxed);
                    if root >= node_count {
                        break;
                    }
                    if !ctx.root_usable(root, k) {
                        continue;
                    }
                    let mut visit = |nodes: &[NodeId], edges: &[(SolidId, usize, usize)]| {
                        if check(nodes, edges) {
                            accepted.store(true, Ordering::Relaxed);
                            true
                        } else {
                            stop.load(Ordering::Relaxed)
                        }
                    };
                    match ctx.dfs_root(root, k, &mut local, &mut visit) {
                        Walk::Continue => {}
                        Walk::Stop => {
                            stop.store(true, Ordering::Relaxed);
                            break;
                        }
                        Walk::TimedOut => {
                            timed_out.store(true, Ordering::Relaxed);
                            stop.store(true, Ordering::Relaxed);
                            break;
                        }
                    }
                }
                states.fetch_add(local.states, Ordering::Relaxed);
                yielded.fetch_add(local.yielded, Ordering::Relaxed);
            });
        }
    });
    LevelSweep {
        any_accepted: accepted.load(std::sync::atomic::Ordering::Relaxed),
        states: states.load(std::sync::atomic::Ordering::Relaxed),
        yielded: yielded.load(std::sync::atomic::Ordering::Relaxed),
        timed_out: timed_out.load(std::sync::atomic::Ordering::Relaxed),
    }
}

/// Deterministic sequential pass over one level, stopping at the
/// lexicographically first accepted tree.
fn level_first_accepted(
    ctx: &GrowCtx,
    k: usize,
    deadline: Instant,
    check: &TreeCheck<'_>,
) -> (Option<TreeSelection>, bool) {
    let mut local = GrowLocal {
        tree_nodes: Vec::new(),
        tree_edges: Vec::new(),
        open: Vec::new(),
        states: 0,
        yielded: 0,
        deadline,
    };
    let mut found: Option<TreeSelection> = None;
    for root in 0..ctx.graph.nodes().len() as NodeId {
        if !ctx.root_usable(root, k) {
            continue;
        }
        // Materialize at accept time: the DFS unwinds its working stacks
        // while propagating the stop.
        let mut visit = |nodes: &[NodeId], edges: &[(SolidId, usize, usize)]| {
            if check(nodes, edges) {
                found = Some(ctx.materialize(nodes, edges));
                true
            } else {
                false
            }
        };
        match ctx.dfs_root(root, k, &mut local, &mut visit) {
            Walk::Continue => {}
            Walk::Stop => break,
            Walk::TimedOut => return (None, true),
        }
    }
    (found, false)
}

/// Outcome of the deepening loop.
struct Deepening {
    /// Lexicographically first accepted tree at the first level containing
    /// one, with that level's index.
    found: Option<(usize, TreeSelection)>,
    stats: GrowStats,
}

/// Iterative deepening over demand-grown trees. Each tree is rooted at its
/// lexicographically smallest node and every added edge covers one open
/// unknown-solid demand, which is exhaustive for minimum trees: a valid
/// tree containing an edge that covers no demand splits, after removing
/// that edge, into a strictly smaller valid tree, so the first level with
/// any accepted tree is the true optimum over `check`-accepted trees.
/// Levels sweep in parallel; a hit re-runs its level sequentially so the
/// returned tree is deterministic.
fn deepen(
    ctx: &GrowCtx,
    limits: &SearchLimits,
    max_nodes: usize,
    check: &TreeCheck<'_>,
) -> Deepening {
    let deadline = Instant::now() + limits.time_limit;
    let threads = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let progress = std::env::var_os("PLUCKERTREE_PROGRESS").is_some();
    let started = Instant::now();
    let mut stats = GrowStats::default();
    for k in 1..=max_nodes {
        if progress {
            eprintln!(
                "[grow{}] level {k} starting at {:?}",
                if ctx.strict { "/strict" } else { "" },
                started.elapsed()
            );
        }
        let sweep = sweep_level(ctx, k, deadline, threads, check);
        stats.states_explored += sweep.states;
        stats.trees_yielded += sweep.yielded;
        stats.yielded_by_level.push(sweep.yielded);
        if progress {
            eprintln!(
                "[grow{}] level {k} done at {:?}: {} trees, accepted={} timed_out={}",
                if ctx.strict { "/strict" } else { "" },
                started.elapsed(),
                sweep.yielded,
                sweep.any_accepted,
                sweep.timed_out
            );
        }
        if sweep.timed_out {
            stats.timed_out = true;
            stats.levels_exhausted = k - 1;
            return Deepening { found: None, stats };
        }
        if sweep.any_accepted {
            stats.levels_exhausted = k - 1;
            let (found, timed_out) = level_first_accepted(ctx, k, deadline, check);
            if timed_out {
                stats.timed_out = true;
                return Deepening { found: None, stats };
            }
            let sel = found.expect("parallel sweep accepted a tree on this level");
            return Deepening {
                found: Some((k, sel)),
                stats,
            };
        }
        stats.levels_exhausted = k;
    }
    Deepening { found: None, stats }
}

/// Thresholds for routing between the explicit branch-and-bound and the
/// growth engine.
const BNB_MAX_NODES: usize = 64;
const BNB_MAX_EDGES: usize = 512;

fn selection_from_index(graph: &GpGraph, sel: &IndexSelection) -> TreeSelection {
    let pos: HashMap<NodeId, usize> = sel.nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    TreeSelection {
        nodes: sel.nodes.iter().map(|&n| graph.node(n).clone()).collect(),
        edges: sel
            .edges
            .iter()
            .map(|e| (e.color, pos[&e.a], pos[&e.b]))
            .collect(),
    }
}

/// Solves the integer program for a minimum tree, routing small explicit
/// models through branch-and-bound and everything else through the growth
/// engine. Returned selections always pass the tree candidate check.
pub fn solve(graph: &GpGraph, limits: &SearchLimits) -> SolveOutcome {
    if graph.nodes().is_empty() {
        return SolveOutcome::Infeasible;
    }
    if let Some(edges) = graph.edges() {
        if graph.nodes().len() <= BNB_MAX_NODES && edges.len() <= BNB_MAX_EDGES {
            let instance = IpInstance::from_graph(graph).expect("edges materialized");
            let mut model = build_ip(instance);
            return match solve_bnb(&mut model, limits) {
                IndexOutcome::Optimal(s) => SolveOutcome::Optimal(selection_from_index(graph, &s)),
                IndexOutcome::Feasible(s) => {
                    SolveOutcome::Feasible(selection_from_index(graph, &s))
                }
                IndexOutcome::Infeasible => SolveOutcome::Infeasible,
                IndexOutcome::TimedOut => SolveOutcome::TimedOut,
            };
        }
    }
    let ctx = GrowCtx::new(graph, false);
    let out = deepen(&ctx, limits, limits.max_nodes, &|_, _| true);
    match out.found {
        Some((_, sel)) => SolveOutcome::Optimal(sel),
        None if out.stats.timed_out => SolveOutcome::TimedOut,
        None => SolveOutcome::Infeasible,
    }
}

/// Full certificate search: stream trees in (size, lex) order, keep the
/// first one whose eliminated polynomial is positive. Candidates failing
/// positivity are counted and skipped, never emitted. A restricted
/// find-first phase runs over the subgraph of positive-usable nodes joined
/// by sign-+1 eliminations (where most published certificates live), after
/// which the unrestricted deepening proves that no smaller positive tree
/// exists.
#[derive(Debug)]
pub struct SearchReport {
    pub outcome: SolveOutcome,
    pub certificate: Option<Certificate>,
    /// Valid trees that failed positivity during the proof sweeps.
    pub rejected_nonpositive: usize,
    /// True when every smaller size was exhausted, proving minimality of
    /// the found certificate among demand-grown trees.
    pub proven_minimal: bool,
    pub stats: GrowStats,
}

pub fn search_certificate(graph: &GpGraph, limits: &SearchLimits) -> SearchReport {
    use std::sync::atomic::{AtomicUsize, Ordering};
    if graph.nodes().is_empty() {
        return SearchReport {
            outcome: SolveOutcome::Infeasible,
            certificate: None,
            rejected_nonpositive: 0,
            proven_minimal: true,
            stats: GrowStats::default(),
        };
    }
    let st = graph.solid_table();
    let rejected = AtomicUsize::new(0);
    let check = |nodes: &[NodeId], edges: &[(SolidId, usize, usize)]| -> bool {
        let rels: Vec<&crate::plucker::Relation> = nodes.iter().map(|&n| graph.node(n)).collect();
        if let Some(false) = screen::screen_positive(st, &rels, edges) {
            rejected.fetch_add(1, Ordering::Relaxed);
            return false;
        }
        // Confirm with the exact arbitrary-precision path.
        let sel = TreeSelection {
            nodes: rels.into_iter().cloned().collect(),
            edges: edges.to_vec(),
        };
        match Certificate::from_tree(sel) {
            Ok(c) => {
                if let Positivity::Positive(_) = positivity_check(st, &c.final_poly) {
                    true
                } else {
                    rejected.fetch_add(1, Ordering::Relaxed);
                    false
                }
            }
            Err(_) => {
                rejected.fetch_add(1, Ordering::Relaxed);
                false
            }
        }
    };

    // Find-first phase over the restricted subgraph.
    let mut strict_found: Option<(usize, TreeSelection)> = None;
    let mut strict_stats = GrowStats::default();
    if limits.strict_first {
        let ctx = GrowCtx::new(graph, true);
        let out = deepen(&ctx, limits, limits.max_nodes, &check);
        strict_found = out.found;
        strict_stats = out.stats;
    }
    if let Some((_, sel)) = &strict_found {
        if !limits.prove_optimal {
            let cert = Certificate::from_tree(sel.clone()).expect("accepted tree eliminates");
            return SearchReport {
                outcome: SolveOutcome::Feasible(sel.clone()),
                certificate: Some(cert),
                rejected_nonpositive: rejected.into_inner(),
                proven_minimal: false,
                stats: strict_stats,
            };
        }
    } else if strict_stats.timed_out {
        return SearchReport {
            outcome: SolveOutcome::TimedOut,
            certificate: None,
            rejected_nonpositive: rejected.into_inner(),
            proven_minimal: false,
            stats: strict_stats,
        };
    }

    // Unrestricted deepening: prove no smaller certificate exists (and find
    // the lexicographically first one at the optimal size).
    let strict_size = strict_found.as_ref().map(|(k, _)| *k);
    let cap = strict_size.map_or(limits.max_nodes, |k| k - 1);
    let full = if cap == 0 {
        Deepening {
            found: None,
            stats: GrowStats::default(),
        }
    } else {
        let ctx = GrowCtx::new(graph, false);
        deepen(&ctx, limits, cap, &check)
    };
    let timed_out = full.stats.timed_out;
    let (outcome, selection, proven) = match (full.found, strict_found) {
        (Some((_, sel)), _) => {
            // A certificate strictly smaller than the restricted one.
            (
                if timed_out {
                    SolveOutcome::Feasible(sel.clone())
                } else {
                    SolveOutcome::Optimal(sel.clone())
                },
                Some(sel),
                !timed_out,
            )
        }
        (None, Some((k, sel))) => {
            let proven = !timed_out && full.stats.levels_exhausted + 1 >= k;
            (
                if proven {
                    SolveOutcome::Optimal(sel.clone())
                } else {
                    SolveOutcome::Feasible(sel.clone())
                },
                Some(sel),
                proven,
            )
        }
        (None, None) => (
            if timed_out {
                SolveOutcome::TimedOut
            } else {
                SolveOutcome::Infeasible
            },
            None,
            !timed_out,
        ),
    };
    let certificate =
        selection.map(|sel| Certificate::from_tree(sel).expect("accepted tree eliminates"));
    SearchReport {
        outcome,
        certificate,
        rejected_nonpositive: rejected.into_inner(),
        proven_minimal: proven,
        stats: full.stats,
    }
}

/// Fast exact screening of tree candidates: the anchored elimination over
/// machine-integer coefficients, falling back to the arbitrary-precision
/// path on overflow. Rejections are exact, never heuristic.
mod screen {
    use std::collections::BTreeMap;

    use crate::plucker::Relation;
    use crate::solids::{SolidId, SolidTable};

    type Mono = Vec<SolidId>;
    type Poly = BTreeMap<Mono, i64>;

    fn add_term(p: &mut Poly, m: Mono, c: i64) -> Option<()> {
        use std::collections::btree_map::Entry;
        match p.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().checked_add(c)?;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
        Some(())
    }

    fn mul(p: &Poly, q: &Poly) -> Option<Poly> {
        let mut out = Poly::new();
        for (m, c) in p {
            for (m2, c2) in q {
                let mut mono = Vec::with_capacity(m.len() + m2.len());
                mono.extend_from_slice(m);
                mono.extend_from_slice(m2);
                mono.sort_unstable();
                add_term(&mut out, mono, c.checked_mul(*c2)?)?;
            }
        }
        Some(out)
    }

    fn scale(p: &Poly, var: SolidId, coeff: i64) -> Option<Poly> {
        let mut out = Poly::new();
        for (m, c) in p {
            let mut mono = Vec::with_capacity(m.len() + 1);
            mono.extend_from_slice(m);
            mono.push(var);
            mono.sort_unstable();
            add_term(&mut out, mono, c.checked_mul(coeff)?)?;
        }
        Some(out)
    }

    fn neg(p: &Poly) -> Option<Poly> {
        let mut out = Poly::new();
        for (m, c) in p {
            out.insert(m.clone(), c.checked_neg()?);
        }
        Some(out)
    }

    /// `Some(positive?)` or `None` when the screen cannot decide (overflow)
    /// and the caller must use the exact path. Mirrors `evaluate_tree`: the
    /// κ coefficients accumulate per edge, anchored at the endpoint
    /// relations' color terms.
    pub fn screen_positive(
        st: &SolidTable,
        nodes: &[&Relation],
        edges: &[(SolidId, usize, usize)],
    ) -> Option<bool> {
        let n = nodes.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut kappa: Vec<BTreeMap<usize, Poly>> = (0..n)
            .map(|i| {
                let mut m = BTreeMap::new();
                let mut one = Poly::new();
                one.insert(Vec::new(), 1);
                m.insert(i, one);
                m
            })
            .collect();
        for &(color, u, v) in edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return Some(false);
            }
            let scaled = |node: usize, kap: &BTreeMap<usize, Poly>| -> Option<Poly> {
                let term = nodes[node].term_with(color)?;
                let partner = term.partner(color)?;
                scale(kap.get(&node)?, partner, term.coeff as i64)
            };
            let min_u = *kappa[ru].keys().next().unwrap();
            let min_v = *kappa[rv].keys().next().unwrap();
            let (main, leaf, main_node, leaf_node) = if min_u <= min_v {
                (ru, rv, u, v)
            } else {
                (rv, ru, v, u)
            };
            let c_main = scaled(main_node, &kappa[main])?;
            let c_leaf = scaled(leaf_node, &kappa[leaf])?;
            let leaf_kappas = std::mem::take(&mut kappa[leaf]);
            let main_kappas = std::mem::take(&mut kappa[main]);
            let mut merged = BTreeMap::new();
            for (m, k) in main_kappas {
                merged.insert(m, neg(&mul(&k, &c_leaf)?)?);
            }
            for (m, k) in leaf_kappas {
                merged.insert(m, mul(&k, &c_main)?);
            }
            parent[leaf] = main;
            kappa[main] = merged;
        }
        let root = find(&mut parent, 0);
        let mut z = Poly::new();
        for (m, k) in &kappa[root] {
            let rel = nodes[*m];
            for t in &rel.terms {
                let mut pair = vec![t.a, t.b];
                pair.sort_unstable();
                for (mono, c) in k {
                    let mut full = Vec::with_capacity(mono.len() + 2);
                    full.extend_from_slice(mono);
                    full.extend_from_slice(&pair);
                    full.sort_unstable();
                    add_term(&mut z, full, c.checked_mul(t.coeff as i64)?)?;
                }
            }
        }
        if z.is_empty() {
            return Some(false);
        }
        let all_neg = z.values().all(|&c| c < 0);
        let all_pos = z.values().all(|&c| c > 0);
        if !all_neg && !all_pos {
            return Some(false);
        }
        for m in z.keys() {
            let mut i = 0;
            while i < m.len() {
                let v = m[i];
                let mut j = i;
                while j < m.len() && m[j] == v {
                    j += 1;
                }
                if (j - i) % 2 == 1 && !st.known(v) {
                    return Some(false);
                }
                i = j;
            }
        }
        Some(true)
    }
}
