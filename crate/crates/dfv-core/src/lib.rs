//! Orbit combinatorics, Steinberg maps and finite-type criteria for double
//! flag varieties of the symmetric pair `(GL_n, GL_p × GL_q)`.

pub mod ci;
pub mod finiteness;
pub mod oracle;
pub mod orbit;
pub mod steinberg;
pub mod young;
