//! Weighted maximum matching in general graphs.
//!
//! Primal-dual "blossom" method after Edmonds, following the formulation in
//! "Efficient Algorithms for Finding Maximum Matching in Graphs" by Zvi Galil
//! (ACM Computing Surveys, 1986) and the well-known reference implementation
//! by Joris van Rantwijk. Runs in O(n^3) time.
//!
//! Weights are floats. After every solve the dual certificate is checked
//! (nonnegative slacks, tight matched edges, full positive-dual blossoms),
//! so a returned matching is optimal up to the verification tolerance.

use crate::error::{Error, Result};

const SENTINEL: usize = usize::MAX;

const FREE: u8 = 0;
const S: u8 = 1;
const T: u8 = 2;
const BREADCRUMB: u8 = 5;

struct Blossom<'a> {
    edges: &'a [(usize, usize, f64)],
    nvertex: usize,
    nedge: usize,
    maxcardinality: bool,
    maxweight: f64,
    endpoint: Vec<usize>,
    neighbend: Vec<Vec<usize>>,
    mate: Vec<usize>,
    label: Vec<u8>,
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Vec<usize>>,
    unusedblossoms: Vec<usize>,
    dualvar: Vec<f64>,
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

/// Indexes a slice Python-style: negative positions count from the end.
fn at(v: &[usize], index: i64) -> usize {
    if index >= 0 {
        v[index as usize]
    } else {
        v[v.len() - (-index) as usize]
    }
}

impl<'a> Blossom<'a> {
    fn new(nvertex: usize, edges: &'a [(usize, usize, f64)], maxcardinality: bool) -> Result<Self> {
        let nedge = edges.len();
        let mut maxn = nvertex;
        for &(i, j, w) in edges {
            if i == j {
                return Err(Error::Domain("matching edge with equal endpoints".into()));
            }
            if !w.is_finite() {
                return Err(Error::Domain(format!("non-finite matching weight {w}")));
            }
            maxn = maxn.max(i + 1).max(j + 1);
        }
        let nvertex = maxn;
        let maxweight = edges.iter().map(|e| e.2).fold(0.0_f64, f64::max);

        // Endpoints 2k and 2k+1 belong to edge k; endpoint[p] is the vertex
        // to which endpoint p is attached.
        let endpoint: Vec<usize> = (0..2 * nedge)
            .map(|p| if p % 2 == 0 { edges[p / 2].0 } else { edges[p / 2].1 })
            .collect();
        let mut neighbend = vec![Vec::new(); nvertex];
        for (k, &(i, j, _)) in edges.iter().enumerate() {
            neighbend[i].push(2 * k + 1);
            neighbend[j].push(2 * k);
        }

        let mut blossombase: Vec<usize> = (0..nvertex).collect();
        blossombase.extend(vec![SENTINEL; nvertex]);
        let mut dualvar = vec![maxweight; nvertex];
        dualvar.extend(vec![0.0; nvertex]);

        Ok(Blossom {
            edges,
            nvertex,
            nedge,
            maxcardinality,
            maxweight,
            endpoint,
            neighbend,
            mate: vec![SENTINEL; nvertex],
            label: vec![FREE; 2 * nvertex],
            labelend: vec![SENTINEL; 2 * nvertex],
            inblossom: (0..nvertex).collect(),
            blossomparent: vec![SENTINEL; 2 * nvertex],
            blossomchilds: vec![Vec::new(); 2 * nvertex],
            blossombase,
            blossomendps: vec![Vec::new(); 2 * nvertex],
            bestedge: vec![SENTINEL; 2 * nvertex],
            blossombestedges: vec![Vec::new(); 2 * nvertex],
            unusedblossoms: (nvertex..2 * nvertex).collect(),
            dualvar,
            allowedge: vec![false; nedge],
            queue: Vec::new(),
        })
    }

    /// 2 * slack of edge k (does not work inside blossoms).
    fn slack(&self, k: usize) -> f64 {
        let (i, j, wt) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - 2.0 * wt
    }

    fn blossom_leaves(&self, b: usize) -> Vec<usize> {
        let mut leaves = Vec::new();
        if b < self.nvertex {
            leaves.push(b);
        } else {
            for &t in &self.blossomchilds[b] {
                if t < self.nvertex {
                    leaves.push(t);
                } else {
                    leaves.extend(self.blossom_leaves(t));
                }
            }
        }
        leaves
    }

    /// Assign label `t` to the top-level blossom containing vertex `w`,
    /// reached through the edge with remote endpoint `p`.
    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let b = self.inblossom[w];
        debug_assert!(self.label[w] == FREE && self.label[b] == FREE);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = SENTINEL;
        self.bestedge[b] = SENTINEL;
        if t == S {
            let leaves = self.blossom_leaves(b);
            self.queue.extend(leaves);
        } else if t == T {
            // The base is the only vertex of a T-blossom with an external
            // mate; its mate becomes an S-vertex.
            let base = self.blossombase[b];
            debug_assert!(self.mate[base] != SENTINEL);
            let mbase = self.mate[base];
            let ep = self.endpoint[mbase];
            self.assign_label(ep, S, mbase ^ 1);
        }
    }

    /// Trace back from v and w to discover either a new blossom or an
    /// augmenting path. Returns the base of the new blossom, or SENTINEL.
    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = SENTINEL;
        let mut v = v;
        let mut w = w;
        while v != SENTINEL || w != SENTINEL {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.blossombase[b];
                break;
            }
            debug_assert_eq!(self.label[b], S);
            path.push(b);
            self.label[b] = BREADCRUMB;
            debug_assert_eq!(self.labelend[b], self.mate[self.blossombase[b]]);
            if self.labelend[b] == SENTINEL {
                // The base of blossom b is single; stop tracing this path.
                v = SENTINEL;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                debug_assert_eq!(self.label[b], T);
                debug_assert!(self.labelend[b] != SENTINEL);
                v = self.endpoint[self.labelend[b]];
            }
            if w != SENTINEL {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = S;
        }
        base
    }

    /// Construct a new blossom with the given base, containing edge k which
    /// connects a pair of S-vertices.
    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];

        let b = self.unusedblossoms.pop().expect("blossom pool exhausted");
        self.blossombase[b] = base;
        self.blossomparent[b] = SENTINEL;
        self.blossomparent[bb] = b;

        let mut childs = Vec::new();
        let mut endps = Vec::new();

        // Trace back from v to base.
        while bv != bb {
            self.blossomparent[bv] = b;
            childs.push(bv);
            endps.push(self.labelend[bv]);
            debug_assert!(
                self.label[bv] == T
                    || (self.label[bv] == S
                        && self.labelend[bv] == self.mate[self.blossombase[bv]])
            );
            debug_assert!(self.labelend[bv] != SENTINEL);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        childs.push(bb);
        childs.reverse();
        endps.reverse();
        endps.push(2 * k);

        // Trace back from w to base.
        while bw != bb {
            self.blossomparent[bw] = b;
            childs.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            debug_assert!(
                self.label[bw] == T
                    || (self.label[bw] == S
                        && self.labelend[bw] == self.mate[self.blossombase[bw]])
            );
            debug_assert!(self.labelend[bw] != SENTINEL);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }

        debug_assert_eq!(self.label[bb], S);
        self.label[b] = S;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0.0;
        self.blossomchilds[b] = childs;
        self.blossomendps[b] = endps;

        for v in self.blossom_leaves(b) {
            if self.label[self.inblossom[v]] == T {
                // Former T-vertices become S-vertices inside an S-blossom.
                self.queue.push(v);
            }
            self.inblossom[v] = b;
        }

        // Compute the least-slack edges to neighbouring S-blossoms.
        let mut bestedgeto = vec![SENTINEL; 2 * self.nvertex];
        for idx in 0..self.blossomchilds[b].len() {
            let bv = self.blossomchilds[b][idx];
            let nblists: Vec<Vec<usize>> = if self.blossombestedges[bv].is_empty() {
                self.blossom_leaves(bv)
                    .into_iter()
                    .map(|v| self.neighbend[v].iter().map(|p| p / 2).collect())
                    .collect()
            } else {
                vec![self.blossombestedges[bv].clone()]
            };
            for nblist in nblists {
                for k in nblist {
                    let (mut i, mut j, _) = self.edges[k];
                    if self.inblossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let _ = i;
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == S
                        && (bestedgeto[bj] == SENTINEL
                            || self.slack(k) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k;
                    }
                }
            }
            self.blossombestedges[bv].clear();
            self.bestedge[bv] = SENTINEL;
        }
        self.blossombestedges[b] = bestedgeto.into_iter().filter(|&k| k != SENTINEL).collect();
        self.bestedge[b] = SENTINEL;
        for idx in 0..self.blossombestedges[b].len() {
            let k = self.blossombestedges[b][idx];
            if self.bestedge[b] == SENTINEL || self.slack(k) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k;
            }
        }
    }

    /// Expand the given top-level blossom.
    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        for idx in 0..self.blossomchilds[b].len() {
            let s = self.blossomchilds[b][idx];
            self.blossomparent[s] = SENTINEL;
            if s < self.nvertex {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0.0 {
                // Recursively expand this sub-blossom.
                self.expand_blossom(s, endstage);
            } else {
                for v in self.blossom_leaves(s) {
                    self.inblossom[v] = s;
                }
            }
        }

        // A T-blossom expanded during a stage must have its sub-blossoms
        // relabeled.
        if !endstage && self.label[b] == T {
            debug_assert!(self.labelend[b] != SENTINEL);
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let mut j = self.blossomchilds[b]
                .iter()
                .position(|&c| c == entrychild)
                .expect("entry child must be a sub-blossom") as i64;
            let (jstep, endptrick): (i64, usize) = if j & 1 != 0 {
                j -= self.blossomchilds[b].len() as i64;
                (1, 0)
            } else {
                (-1, 1)
            };

            // Walk from the entry child to the base, relabeling as we go.
            let mut p = self.labelend[b];
            while j != 0 {
                self.label[self.endpoint[p ^ 1]] = FREE;
                let q = at(&self.blossomendps[b], j - endptrick as i64) ^ endptrick ^ 1;
                self.label[self.endpoint[q]] = FREE;
                let ep = self.endpoint[p ^ 1];
                self.assign_label(ep, T, p);
                self.allowedge[at(&self.blossomendps[b], j - endptrick as i64) / 2] = true;
                j += jstep;
                p = at(&self.blossomendps[b], j - endptrick as i64) ^ endptrick;
                self.allowedge[p / 2] = true;
                j += jstep;
            }

            // Relabel the base T-sub-blossom without stepping to its mate.
            let bv = at(&self.blossomchilds[b], j);
            self.label[self.endpoint[p ^ 1]] = T;
            self.label[bv] = T;
            self.labelend[self.endpoint[p ^ 1]] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = SENTINEL;

            // Continue along the blossom until we get back to entrychild,
            // relabeling sub-blossoms that are reachable from outside.
            j += jstep;
            while at(&self.blossomchilds[b], j) != entrychild {
                let bv = at(&self.blossomchilds[b], j);
                if self.label[bv] == S {
                    j += jstep;
                    continue;
                }
                let mut reached = SENTINEL;
                for v in self.blossom_leaves(bv) {
                    if self.label[v] != FREE {
                        reached = v;
                        break;
                    }
                }
                if reached != SENTINEL {
                    let v = reached;
                    debug_assert_eq!(self.label[v], T);
                    debug_assert_eq!(self.inblossom[v], bv);
                    self.label[v] = FREE;
                    self.label[self.endpoint[self.mate[self.blossombase[bv]]]] = FREE;
                    let lblend = self.labelend[v];
                    self.assign_label(v, T, lblend);
                }
                j += jstep;
            }
        }

        self.label[b] = FREE;
        self.labelend[b] = SENTINEL;
        self.blossombase[b] = SENTINEL;
        self.bestedge[b] = SENTINEL;
        self.blossomchilds[b].clear();
        self.blossomendps[b].clear();
        self.blossombestedges[b].clear();
        self.unusedblossoms.push(b);
    }

    /// Swap matched/unmatched edges over an alternating path through
    /// blossom b between vertex v and the base vertex.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.nvertex {
            self.augment_blossom(t, v);
        }
        let i = self.blossomchilds[b]
            .iter()
            .position(|&c| c == t)
            .expect("vertex must be inside blossom");
        let mut j = i as i64;
        let (jstep, endptrick): (i64, usize) = if i & 1 != 0 {
            j -= self.blossomchilds[b].len() as i64;
            (1, 0)
        } else {
            (-1, 1)
        };
        while j != 0 {
            j += jstep;
            let t = at(&self.blossomchilds[b], j);
            let p = at(&self.blossomendps[b], j - endptrick as i64) ^ endptrick;
            if t >= self.nvertex {
                let ep = self.endpoint[p];
                self.augment_blossom(t, ep);
            }
            j += jstep;
            let t = at(&self.blossomchilds[b], j);
            if t >= self.nvertex {
                let ep = self.endpoint[p ^ 1];
                self.augment_blossom(t, ep);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        debug_assert_eq!(self.blossombase[b], v);
    }

    /// Swap matched/unmatched edges over an alternating path between two
    /// single vertices, running through edge k.
    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for (mut s, mut p) in [(v, 2 * k + 1), (w, 2 * k)] {
            loop {
                let bs = self.inblossom[s];
                debug_assert_eq!(self.label[bs], S);
                debug_assert_eq!(self.labelend[bs], self.mate[self.blossombase[bs]]);
                if bs >= self.nvertex {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == SENTINEL {
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert_eq!(self.label[bt], T);
                debug_assert!(self.labelend[bt] != SENTINEL);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                debug_assert_eq!(self.blossombase[bt], t);
                if bt >= self.nvertex {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    /// Check the dual certificate: all edges have nonnegative slack, matched
    /// edges are tight, single vertices have zero dual, and blossoms with
    /// positive dual are full.
    fn verify_optimum(&self, eps: f64) -> Result<()> {
        let fail = |msg: String| Err(Error::Solver(format!("matching certificate: {msg}")));
        let vdualoffset = if self.maxcardinality {
            let minv = self.dualvar[..self.nvertex].iter().copied().fold(f64::INFINITY, f64::min);
            (-minv).max(0.0)
        } else {
            0.0
        };
        for k in 0..self.nedge {
            let (i, j, wt) = self.edges[k];
            let mut s = self.dualvar[i] + self.dualvar[j] - 2.0 * wt;
            let mut iblossoms = vec![i];
            let mut jblossoms = vec![j];
            while self.blossomparent[*iblossoms.last().unwrap()] != SENTINEL {
                iblossoms.push(self.blossomparent[*iblossoms.last().unwrap()]);
            }
            while self.blossomparent[*jblossoms.last().unwrap()] != SENTINEL {
                jblossoms.push(self.blossomparent[*jblossoms.last().unwrap()]);
            }
            iblossoms.reverse();
            jblossoms.reverse();
            for (&bi, &bj) in iblossoms.iter().zip(jblossoms.iter()) {
                if bi != bj {
                    break;
                }
                s += 2.0 * self.dualvar[bi];
            }
            if s < -eps {
                return fail(format!("edge {k} has negative slack {s}"));
            }
            let mi = self.mate[i];
            let mj = self.mate[j];
            let i_matched_here = mi != SENTINEL && mi / 2 == k;
            let j_matched_here = mj != SENTINEL && mj / 2 == k;
            if i_matched_here || j_matched_here {
                if !(i_matched_here && j_matched_here) {
                    return fail(format!("edge {k} is half-matched"));
                }
                if s.abs() > eps {
                    return fail(format!("matched edge {k} has slack {s}"));
                }
            }
        }
        for v in 0..self.nvertex {
            if self.mate[v] == SENTINEL && (self.dualvar[v] + vdualoffset).abs() > eps {
                return fail(format!("single vertex {v} has dual {}", self.dualvar[v]));
            }
        }
        for b in self.nvertex..2 * self.nvertex {
            if self.blossombase[b] != SENTINEL && self.dualvar[b] > eps {
                if self.blossomendps[b].len() % 2 != 1 {
                    return fail(format!("blossom {b} has even endpoint list"));
                }
                for (ix, &p) in self.blossomendps[b].iter().enumerate() {
                    if ix % 2 == 1 {
                        if self.mate[self.endpoint[p]] != p ^ 1
                            || self.mate[self.endpoint[p ^ 1]] != p
                        {
                            return fail(format!("positive-dual blossom {b} is not full"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn solve(&mut self) -> Result<Vec<usize>> {
        if self.nedge == 0 {
            return Ok(vec![SENTINEL; self.nvertex]);
        }
        let substage_cap = 20 * (self.nedge + 2 * self.nvertex) + 100;

        // Each stage finds an augmenting path and uses it to improve the
        // matching.
        for _stage in 0..self.nvertex {
            self.label = vec![FREE; 2 * self.nvertex];
            self.bestedge = vec![SENTINEL; 2 * self.nvertex];
            for b in self.nvertex..2 * self.nvertex {
                self.blossombestedges[b].clear();
            }
            self.allowedge = vec![false; self.nedge];
            self.queue.clear();

            for v in 0..self.nvertex {
                if self.mate[v] == SENTINEL && self.label[self.inblossom[v]] == FREE {
                    self.assign_label(v, S, SENTINEL);
                }
            }

            let mut augmented = false;
            let mut substages = 0usize;
            loop {
                substages += 1;
                if substages > substage_cap {
                    return Err(Error::Solver("matching substage limit exceeded".into()));
                }

                // Continue labeling until all vertices reachable through an
                // alternating path have a label.
                while let Some(v) = self.queue.pop() {
                    debug_assert_eq!(self.label[self.inblossom[v]], S);
                    for pidx in 0..self.neighbend[v].len() {
                        let p = self.neighbend[v][pidx];
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[w] {
                            continue;
                        }
                        let mut kslack = 0.0;
                        if !self.allowedge[k] {
                            kslack = self.slack(k);
                            if kslack <= 0.0 {
                                self.allowedge[k] = true;
                            }
                        }
                        if self.allowedge[k] {
                            if self.label[self.inblossom[w]] == FREE {
                                // w is free; label it T and its mate S.
                                self.assign_label(w, T, p ^ 1);
                            } else if self.label[self.inblossom[w]] == S {
                                // Two S-vertices: either a new blossom or an
                                // augmenting path.
                                let base = self.scan_blossom(v, w);
                                if base != SENTINEL {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if self.label[w] == FREE {
                                debug_assert_eq!(self.label[self.inblossom[w]], T);
                                self.label[w] = T;
                                self.labelend[w] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[w]] == S {
                            let b = self.inblossom[v];
                            if self.bestedge[b] == SENTINEL
                                || kslack < self.slack(self.bestedge[b])
                            {
                                self.bestedge[b] = k;
                            }
                        } else if self.label[w] == FREE {
                            if self.bestedge[w] == SENTINEL
                                || kslack < self.slack(self.bestedge[w])
                            {
                                self.bestedge[w] = k;
                            }
                        }
                    }
                    if augmented {
                        break;
                    }
                }
                if augmented {
                    break;
                }

                // No augmenting path under the current duals; pump slack out
                // of the dual variables.
                let mut deltatype = -1i32;
                let mut delta = 0.0f64;
                let mut deltaedge = SENTINEL;
                let mut deltablossom = SENTINEL;

                if !self.maxcardinality {
                    deltatype = 1;
                    delta = self.dualvar[..self.nvertex]
                        .iter()
                        .copied()
                        .fold(f64::INFINITY, f64::min);
                }

                // delta2: minimum slack on any edge between an S-vertex and
                // a free vertex.
                for v in 0..self.nvertex {
                    if self.label[self.inblossom[v]] == FREE && self.bestedge[v] != SENTINEL {
                        let d = self.slack(self.bestedge[v]);
                        if deltatype == -1 || d < delta {
                            delta = d;
                            deltatype = 2;
                            deltaedge = self.bestedge[v];
                        }
                    }
                }

                // delta3: half the minimum slack on any edge between a pair
                // of S-blossoms.
                for b in 0..2 * self.nvertex {
                    if self.blossomparent[b] == SENTINEL
                        && self.label[b] == S
                        && self.bestedge[b] != SENTINEL
                    {
                        let d = self.slack(self.bestedge[b]) / 2.0;
                        if deltatype == -1 || d < delta {
                            delta = d;
                            deltatype = 3;
                            deltaedge = self.bestedge[b];
                        }
                    }
                }

                // delta4: minimum z variable of any T-blossom.
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossombase[b] != SENTINEL
                        && self.blossomparent[b] == SENTINEL
                        && self.label[b] == T
                        && (deltatype == -1 || self.dualvar[b] < delta)
                    {
                        delta = self.dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }

                if deltatype == -1 {
                    // No further improvement possible; max-cardinality
                    // optimum reached. Final update to make the optimum
                    // verifiable.
                    debug_assert!(self.maxcardinality);
                    deltatype = 1;
                    delta = self.dualvar[..self.nvertex]
                        .iter()
                        .copied()
                        .fold(f64::INFINITY, f64::min)
                        .max(0.0);
                }

                for v in 0..self.nvertex {
                    match self.label[self.inblossom[v]] {
                        FREE => {}
                        S => self.dualvar[v] -= delta,
                        T => self.dualvar[v] += delta,
                        other => unreachable!("unexpected vertex label {other}"),
                    }
                }
                for b in self.nvertex..2 * self.nvertex {
                    if self.blossombase[b] != SENTINEL && self.blossomparent[b] == SENTINEL {
                        match self.label[b] {
                            FREE => {}
                            S => self.dualvar[b] += delta,
                            T => self.dualvar[b] -= delta,
                            other => unreachable!("unexpected blossom label {other}"),
                        }
                    }
                }

                match deltatype {
                    1 => break,
                    2 => {
                        self.allowedge[deltaedge] = true;
                        let (mut i, j, _) = self.edges[deltaedge];
                        if self.label[self.inblossom[i]] == FREE {
                            i = j;
                        }
                        debug_assert_eq!(self.label[self.inblossom[i]], S);
                        self.queue.push(i);
                    }
                    3 => {
                        self.allowedge[deltaedge] = true;
                        let (i, _, _) = self.edges[deltaedge];
                        debug_assert_eq!(self.label[self.inblossom[i]], S);
                        self.queue.push(i);
                    }
                    4 => self.expand_blossom(deltablossom, false),
                    other => unreachable!("unexpected delta type {other}"),
                }
            }

            if !augmented {
                break;
            }

            // End of stage: expand all S-blossoms with zero dual.
            for b in self.nvertex..2 * self.nvertex {
                if self.blossomparent[b] == SENTINEL
                    && self.blossombase[b] != SENTINEL
                    && self.label[b] == S
                    && self.dualvar[b] == 0.0
                {
                    self.expand_blossom(b, true);
                }
            }
        }

        let eps = 1e-9 * self.maxweight.abs().max(1.0);
        self.verify_optimum(eps)?;

        let mut mate = self.mate.clone();
        for v in 0..self.nvertex {
            if mate[v] != SENTINEL {
                mate[v] = self.endpoint[mate[v]];
            }
        }
        for v in 0..self.nvertex {
            debug_assert!(mate[v] == SENTINEL || mate[mate[v]] == v);
        }
        Ok(mate)
    }
}

/// Maximum-weight matching on an undirected weighted graph with vertices
/// `0..num_vertices`. With `max_cardinality`, only maximum-cardinality
/// matchings are considered. Returns, per vertex, the matched partner.
pub(crate) fn max_weight_matching(
    num_vertices: usize,
    edges: &[(usize, usize, f64)],
    max_cardinality: bool,
) -> Result<Vec<Option<usize>>> {
    let mut solver = Blossom::new(num_vertices, edges, max_cardinality)?;
    let mate = solver.solve()?;
    Ok(mate
        .into_iter()
        .map(|m| if m == SENTINEL { None } else { Some(m) })
        .collect())
}
