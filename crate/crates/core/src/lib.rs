//! Classification of finite group actions on compact Riemann surfaces with
//! rational quotient, one representative per topological type.





pub mod aut;
pub mod classes;


pub mod error;
pub mod group;
pub mod perm;




pub use error::Error;
