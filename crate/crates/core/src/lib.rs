//! Desk-scale laboratory for credible sealed-bid auctions.
//!
//! The crate simulates two commitment-based auction formats — the deferred
//! revelation auction `DRA(f)` and the second-price auction with commitments
//! (SPC) — under honest execution and under a suite of adversarial seller
//! strategies, and audits the revenue claims behind them with exact
//! enumeration, quadrature, and seeded Monte-Carlo estimates.
//!
//! Module map:
//! - [`dist`]: value distributions and the virtual-value / hazard / reserve
//!   calculus, including the tail and pricing bounds used as numeric oracles.
//! - [`commit`]: a toy Pedersen commitment scheme plus an ideal commitment
//!   ledger with an optional malleability capability.
//! - [`protocol`]: the message-level DRA/SPC engine — rounds, per-bidder
//!   views, resolution, fines, and the safety validator.
//! - [`strategy`]: the seller deviation suite (prefix-reveal fake bids and
//!   the named attacks).
//! - [`audit`]: Monte-Carlo and exact estimators, theorem/lemma checks, and
//!   CSV/JSON report plumbing.

pub mod audit;
pub mod commit;
pub mod dist;
pub mod error;
pub mod protocol;
pub mod rng;
pub mod strategy;

mod quad;

pub use dist::{Distribution, RevenueFigure};
pub use error::{Error, Result};
pub use protocol::{FineSchedule, Outcome, Transcript};
pub use strategy::SellerStrategy;
