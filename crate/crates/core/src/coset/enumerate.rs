//! The enumeration engine: table storage, coincidence processing, and the
//! HLT and Felsch definition strategies.

use super::{EnumerationBudget, EnumerationStats, Strategy};
use crate::error::{Error, Result};
use crate::presentation::Word;
use std::sync::Arc;
use std::time::Instant;

pub(crate) const NONE: u32 = u32::MAX;

/// Columns are `2g` for generator `g` and `2g + 1` for its inverse.
pub(crate) fn word_cols(w: &Word) -> Vec<u32> {
    w.steps()
        .map(|(g, pos)| 2 * g as u32 + if pos { 0 } else { 1 })
        .collect()
}

enum Stop {
    Full,
    Fatal(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Fatal(e)
    }
}

pub(crate) struct Engine {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    queue: Vec<u32>,
    deductions: Vec<(u32, u32)>,
    track_deductions: bool,
    deduction_overflow: bool,
    rels: Arc<Vec<Vec<u32>>>,
    hgens: Arc<Vec<Vec<u32>>>,
    budget: EnumerationBudget,
    start: Instant,
    stats: EnumerationStats,
}

const DEDUCTION_CAP: usize = 1 << 16;

impl Engine {
    pub(crate) fn new(
        n_gens: usize,
        rels: &[Word],
        hgens: &[Word],
        budget: EnumerationBudget,
    ) -> Self {
        let ncols = 2 * n_gens;
        let mut e = Engine {
            ncols,
            table: Vec::new(),
            parent: Vec::new(),
            live: 0,
            queue: Vec::new(),
            deductions: Vec::new(),
            track_deductions: false,
            deduction_overflow: false,
            rels: Arc::new(rels.iter().map(word_cols).filter(|r| !r.is_empty()).collect()),
            hgens: Arc::new(hgens.iter().map(word_cols).filter(|r| !r.is_empty()).collect()),
            budget,
            start: Instant::now(),
            stats: EnumerationStats::default(),
        };
        e.new_row();
        e
    }

    fn new_row(&mut self) -> u32 {
        let c = self.parent.len() as u32;
        self.table.extend(std::iter::repeat_n(NONE, self.ncols));
        self.parent.push(c);
        self.live += 1;
        self.stats.total_defined += 1;
        self.stats.max_live = self.stats.max_live.max(self.live);
        c
    }

    #[inline]
    fn get(&self, c: u32, x: u32) -> u32 {
        self.table[c as usize * self.ncols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: u32, v: u32) {
        self.table[c as usize * self.ncols + x as usize] = v;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rows(&self) -> usize {
        self.parent.len()
    }

    fn check_time(&self) -> Result<()> {
        if self.start.elapsed() > self.budget.max_time {
            return Err(Error::budget(format!(
                "time limit of {:?} reached with {} live cosets",
                self.budget.max_time, self.live
            )));
        }
        Ok(())
    }

    fn define(&mut self, c: u32, x: u32) -> std::result::Result<u32, Stop> {
        if self.live >= self.budget.max_cosets {
            return Err(Stop::Full);
        }
        if self.stats.total_defined.is_multiple_of(4096) {
            self.check_time()?;
        }
        let d = self.new_row();
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        if self.track_deductions {
            self.push_deduction(c, x);
        }
        Ok(d)
    }

    fn push_deduction(&mut self, c: u32, x: u32) {
        if self.deductions.len() < DEDUCTION_CAP {
            self.deductions.push((c, x));
        } else {
            self.deduction_overflow = true;
        }
    }

    fn rep(&mut self, mut k: u32) -> u32 {
        let mut root = k;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[k as usize] != root {
            let next = self.parent[k as usize];
            self.parent[k as usize] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: u32, l: u32) {
        let a = self.rep(k);
        let b = self.rep(l);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.live -= 1;
        self.queue.push(hi);
        self.stats.coincidences += 1;
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols as u32 {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu, mx);
                } else {
                    let nx = self.get(nu, x ^ 1);
                    if nx != NONE {
                        self.merge(mu, nx);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                        if self.track_deductions {
                            self.push_deduction(mu, x);
                        }
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Traces `w` forwards and backwards from `c`, defining new cosets to fill
    /// the gap when `fill` is set.
    fn scan(&mut self, c: u32, w: &[u32], fill: bool) -> std::result::Result<(), Stop> {
        let mut f = c;
        let mut i = 0usize;
        let mut b = c;
        let mut j = w.len();
        loop {
            while i < j {
                let n = self.get(f, w[i]);
                if n == NONE {
                    break;
                }
                f = n;
                i += 1;
            }
            if i == j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j > i {
                let n = self.get(b, w[j - 1] ^ 1);
                if n == NONE {
                    break;
                }
                b = n;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let x = w[i];
                self.set(f, x, b);
                self.set(b, x ^ 1, f);
                if self.track_deductions {
                    self.push_deduction(f, x);
                }
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    /// Renumbers live cosets consecutively, preserving order. Returns the map.
    fn compact(&mut self) -> Vec<u32> {
        let n = self.rows();
        let mut map = vec![NONE; n];
        let mut k = 0u32;
        for c in 0..n {
            if self.parent[c] == c as u32 {
                map[c] = k;
                k += 1;
            }
        }
        let mut table = Vec::with_capacity(k as usize * self.ncols);
        for c in 0..n {
            if map[c] == NONE {
                continue;
            }
            for x in 0..self.ncols {
                let v = self.table[c * self.ncols + x];
                table.push(if v == NONE { NONE } else { map[v as usize] });
            }
        }
        self.table = table;
        self.parent = (0..k).collect();
        self.deductions.clear();
        map
    }

    /// Scans every live coset under every relator without defining anything.
    fn lookahead(&mut self) -> Result<()> {
        self.stats.lookaheads += 1;
        let rels = Arc::clone(&self.rels);
        let mut c = 0;
        while c < self.rows() {
            if self.is_live(c as u32) {
                for r in rels.iter() {
                    match self.scan(c as u32, r, false) {
                        Ok(()) => {}
                        Err(Stop::Fatal(e)) => return Err(e),
                        Err(Stop::Full) => unreachable!("lookahead never defines"),
                    }
                    if !self.is_live(c as u32) {
                        break;
                    }
                }
            }
            c += 1;
        }
        self.check_time()
    }

    fn full(&self) -> Error {
        Error::budget(format!(
            "coset limit of {} reached",
            self.budget.max_cosets
        ))
    }

    fn scan_hgens(&mut self, by_first: &[Vec<Vec<u32>>]) -> Result<()> {
        let hgens = Arc::clone(&self.hgens);
        for w in hgens.iter() {
            loop {
                match self.scan(0, w, true) {
                    Ok(()) => break,
                    Err(Stop::Full) => {
                        let before = self.live;
                        self.lookahead()?;
                        if self.live == before {
                            return Err(self.full());
                        }
                    }
                    Err(Stop::Fatal(e)) => return Err(e),
                }
            }
            if self.track_deductions {
                self.process_deductions(by_first)?;
            }
        }
        Ok(())
    }

    pub(crate) fn run_hlt(&mut self) -> Result<()> {
        self.scan_hgens(&[])?;
        let rels = Arc::clone(&self.rels);
        let mut a = 0usize;
        while a < self.rows() {
            if self.rows() > 4096 && self.rows() >= 2 * self.live {
                let map = self.compact();
                // next live coset at or after the old position
                a = (a..map.len())
                    .find(|&c| map[c] != NONE)
                    .map_or(self.rows(), |c| map[c] as usize);
                continue;
            }
            if !self.is_live(a as u32) {
                a += 1;
                continue;
            }
            let mut full = false;
            for r in rels.iter() {
                match self.scan(a as u32, r, true) {
                    Ok(()) => {}
                    Err(Stop::Full) => {
                        full = true;
                        break;
                    }
                    Err(Stop::Fatal(e)) => return Err(e),
                }
                if !self.is_live(a as u32) {
                    break;
                }
            }
            if !full && self.is_live(a as u32) {
                for x in 0..self.ncols as u32 {
                    if self.get(a as u32, x) == NONE {
                        match self.define(a as u32, x) {
                            Ok(_) => {}
                            Err(Stop::Full) => {
                                full = true;
                                break;
                            }
                            Err(Stop::Fatal(e)) => return Err(e),
                        }
                    }
                }
            }
            if full {
                let before = self.live;
                self.lookahead()?;
                if self.live == before {
                    return Err(self.full());
                }
                // the same position is scanned again
                continue;
            }
            a += 1;
        }
        self.close()
    }

    /// Relator rotations and their inverses, grouped by first column.
    fn conjugates_by_first(&self) -> Vec<Vec<Vec<u32>>> {
        let mut by_first: Vec<Vec<Vec<u32>>> = vec![Vec::new(); self.ncols];
        let mut seen = std::collections::HashSet::new();
        for r in self.rels.iter() {
            let inv: Vec<u32> = r.iter().rev().map(|&x| x ^ 1).collect();
            for base in [r, &inv] {
                for k in 0..base.len() {
                    let rot: Vec<u32> = base[k..].iter().chain(&base[..k]).copied().collect();
                    if seen.insert(rot.clone()) {
                        by_first[rot[0] as usize].push(rot);
                    }
                }
            }
        }
        by_first
    }

    fn process_deductions(&mut self, by_first: &[Vec<Vec<u32>>]) -> Result<()> {
        while let Some((c, x)) = self.deductions.pop() {
            if self.deduction_overflow {
                break;
            }
            if !self.is_live(c) {
                continue;
            }
            for r in by_first.get(x as usize).into_iter().flatten() {
                if let Err(Stop::Fatal(e)) = self.scan(c, r, false) {
                    return Err(e);
                }
                if !self.is_live(c) {
                    break;
                }
            }
            let c = self.rep(c);
            let d = self.get(c, x);
            if d != NONE {
                for r in by_first.get((x ^ 1) as usize).into_iter().flatten() {
                    if let Err(Stop::Fatal(e)) = self.scan(d, r, false) {
                        return Err(e);
                    }
                    if !self.is_live(d) {
                        break;
                    }
                }
            }
        }
        if self.deduction_overflow {
            // fall back to scanning everything
            self.deduction_overflow = false;
            self.deductions.clear();
            self.lookahead()?;
        }
        Ok(())
    }

    pub(crate) fn run_felsch(&mut self) -> Result<()> {
        self.track_deductions = true;
        let by_first = self.conjugates_by_first();
        self.scan_hgens(&by_first)?;
        let mut a = 0usize;
        loop {
            while a < self.rows() && (!self.is_live(a as u32) || self.row_complete(a as u32)) {
                a += 1;
            }
            if a >= self.rows() {
                break;
            }
            let x = (0..self.ncols as u32)
                .find(|&x| self.get(a as u32, x) == NONE)
                .expect("incomplete row");
            match self.define(a as u32, x) {
                Ok(_) => {}
                Err(Stop::Full) => return Err(self.full()),
                Err(Stop::Fatal(e)) => return Err(e),
            }
            self.process_deductions(&by_first)?;
        }
        self.close()
    }

    /// Repeats full scans of the complete table until one pass finds no
    /// coincidence, so every relator closes at every coset.
    fn close(&mut self) -> Result<()> {
        loop {
            let before = self.stats.coincidences;
            self.lookahead()?;
            if self.stats.coincidences == before {
                return Ok(());
            }
        }
    }

    fn row_complete(&self, c: u32) -> bool {
        (0..self.ncols as u32).all(|x| self.get(c, x) != NONE)
    }

    /// Final compact table and statistics.
    pub(crate) fn finish(mut self) -> (usize, Vec<u32>, EnumerationStats) {
        self.compact();
        self.stats.elapsed_ms = self.start.elapsed().as_millis() as u64;
        (self.parent.len(), self.table, self.stats)
    }

    pub(crate) fn run(&mut self, strategy: Strategy) -> Result<()> {
        match strategy {
            Strategy::Hlt => self.run_hlt(),
            Strategy::Felsch => self.run_felsch(),
        }
    }
}
