pub mod advisor;
pub mod cli;
pub mod chordal;
pub mod complexity;
pub mod io;
pub mod poly;
pub mod projection;
