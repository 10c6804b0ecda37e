//! Preimages under `ds_n` on a finite window of monomial orbit sums, and the
//! recursive certificate writing an element of `J_n` as a lift of its
//! `ds`-image plus a thin Kac kernel part at every rank.

mod certificate;
mod lattice;
mod system;

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::dsmap::membership;
use crate::error::{Error, Result};
use crate::laurent::{monomial_orbit_sum, LaurentPoly};
use system::{row_keys_of, window_columns, Echelon, RowKey};

pub use certificate::{certify, Certificate, RankRecord};

/// Cap on the auto-window bound when none is given.
pub const DEFAULT_MAX_WINDOW: i64 = 12;

/// Finite truncation: orbit sums `m_μ` with every `|μ_i| ≤ bound` and,
/// if set, `|Σ μ_i| ≤ degree_cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub bound: i64,
    pub degree_cap: Option<i64>,
}

impl Window {
    pub fn new(bound: i64) -> Self {
        Window {
            bound: bound.max(0),
            degree_cap: None,
        }
    }

    pub fn with_degree_cap(mut self, cap: i64) -> Self {
        self.degree_cap = Some(cap);
        self
    }
}

/// The factored window system for one `(n, window)`; reusable across
/// right hand sides.
pub struct WindowSolver {
    n: usize,
    window: Window,
    columns: Vec<Vec<i64>>,
    rows: Vec<Vec<usize>>,
    /// `ν ↦` slot of the row `(ν, 0)`.
    slots: HashMap<Vec<i64>, usize>,
    slot_rows: Vec<usize>,
    echelon: Echelon,
}

impl WindowSolver {
    /// Membership constraints plus the `ds_n` rows.
    pub fn new(n: usize, window: Window) -> Self {
        Self::build(n, window, true)
    }

    fn build(n: usize, window: Window, with_ds_rows: bool) -> Self {
        let columns = window_columns(n, &window);
        let mut index: HashMap<RowKey, usize> = HashMap::new();
        let mut keys: Vec<RowKey> = Vec::new();
        let mut rows: Vec<Vec<usize>> = Vec::new();
        for (c, mu) in columns.iter().enumerate() {
            for key in row_keys_of(mu) {
                if key.d == 0 && !with_ds_rows {
                    continue;
                }
                let r = *index.entry(key.clone()).or_insert_with(|| {
                    keys.push(key);
                    rows.push(Vec::new());
                    rows.len() - 1
                });
                rows[r].push(c);
            }
        }
        let mut slots = HashMap::new();
        let mut slot_rows = Vec::new();
        let mut rhs_slot = vec![None; rows.len()];
        for (r, key) in keys.iter().enumerate() {
            if key.d == 0 {
                rhs_slot[r] = Some(slot_rows.len());
                slots.insert(key.nu.clone(), slot_rows.len());
                slot_rows.push(r);
            }
        }
        let echelon = Echelon::build(columns.len(), &rows, &rhs_slot);
        WindowSolver {
            n,
            window,
            columns,
            rows,
            slots,
            slot_rows,
            echelon,
        }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn num_unknowns(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    fn assemble<'a>(&self, coeffs: impl Iterator<Item = (&'a usize, &'a BigInt)>) -> LaurentPoly {
        let mut f = LaurentPoly::zero(self.n);
        for (c, v) in coeffs {
            f += &monomial_orbit_sum(&self.columns[*c]).scale(v);
        }
        f
    }

    /// The canonical `f` in the window with `f ∈ J_n` and `ds_n(f) = h`.
    pub fn solve(&self, h: &LaurentPoly) -> Result<LaurentPoly> {
        if h.arity() + 2 != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n - 2,
                found: h.arity(),
            });
        }
        let too_small = Error::WindowTooSmall {
            bound: self.window.bound,
        };
        let mut rhs: HashMap<usize, BigInt> = HashMap::new();
        for (e, c) in h.terms() {
            let e = e.as_slice();
            if e.windows(2).any(|p| p[0] < p[1]) {
                continue;
            }
            match self.slots.get(e) {
                Some(s) => {
                    rhs.insert(*s, c.clone());
                }
                None => return Err(too_small),
            }
        }
        let x = self.echelon.solve(&rhs).ok_or(too_small)?;
        if x.values().all(|v| v.is_integer()) {
            let ints: BTreeMap<usize, BigInt> =
                x.into_iter().map(|(c, v)| (c, v.to_integer())).collect();
            return Ok(self.assemble(ints.iter()));
        }
        let rows: Vec<Vec<(usize, BigInt)>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&c| (c, BigInt::from(1))).collect())
            .collect();
        let mut b = vec![BigInt::zero(); rows.len()];
        for (s, v) in &rhs {
            b[self.slot_rows[*s]] = v.clone();
        }
        let x = lattice::solve_integral(self.columns.len(), &rows, &b).ok_or(
            Error::NoIntegerSolution {
                bound: self.window.bound,
            },
        )?;
        Ok(self.assemble(x.iter()))
    }
}

/// Spanning set of `J_n` within the window: one primitive kernel vector of
/// the membership constraints per free orbit sum.
pub fn window_basis(n: usize, window: Window) -> Vec<LaurentPoly> {
    let solver = WindowSolver::build(n, window, false);
    solver
        .echelon
        .free_columns()
        .into_iter()
        .map(|free| {
            let v = solver.echelon.kernel_vector(free);
            solver.assemble(v.iter())
        })
        .collect()
}

/// Spanning set of `ker ds_n ∩ J_n` within the window.
pub fn kernel_window_basis(n: usize, window: Window) -> Vec<LaurentPoly> {
    let solver = WindowSolver::build(n, window, true);
    solver
        .echelon
        .free_columns()
        .into_iter()
        .map(|free| {
            let v = solver.echelon.kernel_vector(free);
            solver.assemble(v.iter())
        })
        .collect()
}

fn check_target(h: &LaurentPoly, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::BadRank {
            rank: n,
            reason: "ds needs at least two variables",
        });
    }
    if h.arity() + 2 != n {
        return Err(Error::ArityMismatch {
            expected: n - 2,
            found: h.arity(),
        });
    }
    let report = membership(h);
    if !report.symmetric {
        return Err(Error::NotSymmetric);
    }
    if let Some((t_exp, _)) = report.witness {
        return Err(Error::NotMember { t_exp });
    }
    Ok(())
}

/// Preimage of `h ∈ J_{n-2}` inside a fixed window.
pub fn lift_window(h: &LaurentPoly, n: usize, window: Window) -> Result<LaurentPoly> {
    check_target(h, n)?;
    WindowSolver::new(n, window).solve(h)
}

/// Preimage of `h` with the auto-window: bounds `max|exp h| + n`,
/// `+2`, `+4`, … up to `max_window`.
pub fn lift(h: &LaurentPoly, n: usize, max_window: i64) -> Result<LaurentPoly> {
    Lifter::new(max_window).lift(h, n)
}

/// Auto-window lifting with factored systems kept between calls.
pub struct Lifter {
    max_window: i64,
    cache: HashMap<(usize, Window), Rc<WindowSolver>>,
}

impl Default for Lifter {
    fn default() -> Self {
        Lifter::new(DEFAULT_MAX_WINDOW)
    }
}

impl Lifter {
    pub fn new(max_window: i64) -> Self {
        Lifter {
            max_window,
            cache: HashMap::new(),
        }
    }

    pub fn max_window(&self) -> i64 {
        self.max_window
    }

    pub fn solver(&mut self, n: usize, window: Window) -> Rc<WindowSolver> {
        self.cache
            .entry((n, window))
            .or_insert_with(|| Rc::new(WindowSolver::new(n, window)))
            .clone()
    }

    pub fn lift_window(
        &mut self,
        h: &LaurentPoly,
        n: usize,
        window: Window,
    ) -> Result<LaurentPoly> {
        check_target(h, n)?;
        self.solver(n, window).solve(h)
    }

    pub fn lift(&mut self, h: &LaurentPoly, n: usize) -> Result<LaurentPoly> {
        check_target(h, n)?;
        let start = h.max_abs_exponent() + n as i64;
        let mut last = Error::WindowTooSmall {
            bound: self.max_window,
        };
        let mut bound = start;
        while bound <= self.max_window {
            match self.solver(n, Window::new(bound)).solve(h) {
                Ok(f) => return Ok(f),
                Err(e @ (Error::WindowTooSmall { .. } | Error::NoIntegerSolution { .. })) => {
                    last = e
                }
                Err(e) => return Err(e),
            }
            bound += 2;
        }
        Err(last)
    }

    pub fn certify(&mut self, f: &LaurentPoly) -> Result<Certificate> {
        certificate::certify_with(self, f)
    }
}
