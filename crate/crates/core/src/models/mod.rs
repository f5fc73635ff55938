//! Concrete finite systems: periodic lattice, planar rotor, spin, driven two-level atom.

mod lattice;
mod rabi;
mod rotor;
mod spin;

pub use lattice::{make_lattice, signed_modes, LatticeSystem, MIN_SITES};
pub use rabi::{make_rabi, Polarization, RabiDrive};
pub use rotor::{make_rotor, RotorSystem, MIN_ROTOR_M};
pub use spin::{make_spin, SpinSystem};
