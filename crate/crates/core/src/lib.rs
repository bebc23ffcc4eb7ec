pub mod algebra;
pub mod classify;
pub mod cli;
pub mod cohiggs;
pub mod geometry;
pub mod io;
pub mod verify;
