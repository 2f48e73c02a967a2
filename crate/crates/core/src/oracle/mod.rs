//! Independent reference computations used to cross-check the main
//! implementations. They favour enumeration over structure and are slow.

pub mod fermat;
pub mod fiber;
