pub mod curve;
pub mod modpoly;
pub mod qexp;
pub mod siegel;
pub mod sp4;
pub mod verify;
