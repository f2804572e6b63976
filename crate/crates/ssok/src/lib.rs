//! Combinatorics of finite simplicial sets, marked anodyne maps, finite
//! categories and discrete operads.

pub mod sset;
pub mod anodyne;
pub mod cat;
pub mod operad;
pub mod properties;
pub mod report;
pub mod suite;
