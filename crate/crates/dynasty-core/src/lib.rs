//! Solver for a finite-horizon dynastic consumption problem.
//!
//! A planner picks consumption for generations `t = 0..=n` of a dynasty that
//! shares a capital stock under Cobb-Douglas production with complete
//! depreciation (`k_{t+1} = A·k_t^θ − c_t`, terminal `k_{n+1} = 0`) and ranks
//! plans by the discounted log-consumption sum `V[n] = Σ β^t · log c_t`.
//!
//! The crate provides:
//!
//! - [`model`]: parameters, validation, regime classification, and the
//!   geometric sum `S_ℓ` that drives every closed form;
//! - [`closed_form`]: the optimal trajectory and `V[n]` for arbitrary valid
//!   `(β, θ)`, plus initial-consumption analytics;
//! - [`ak`]: the linear-production specialization (`θ = 1`, `β < 1`) with a
//!   continuous-horizon value function and its first-order-condition
//!   analysis;
//! - [`zero_discount`]: the undiscounted specialization (`β = 1`, `θ < 1`)
//!   and the fully degenerate `β = θ = 1` branch;
//! - [`horizon`]: integer optimal-horizon search, infinite-horizon
//!   classification, plateau detection, and value curves;
//! - [`inequality`]: Lorenz curves and Gini indices of consumption streams;
//! - [`oracle`]: two independent brute-force solvers (grid backward
//!   induction and coordinate search) used to cross-validate the closed
//!   forms.
//!
//! Curve generation and the grid oracle fan work out with rayon when the
//! default `parallel` feature is enabled; disabling it swaps in a sequential
//! implementation with identical results.

pub mod ak;
pub mod closed_form;
pub mod horizon;
pub mod inequality;
pub mod model;
pub mod oracle;
pub mod zero_discount;

mod numerics;
mod parallel;

pub use model::ModelParams;
