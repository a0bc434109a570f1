pub mod cohomology;
pub mod error;
pub mod group;
pub mod zmod;
pub mod extensions;
pub mod series;
pub mod descent;
pub mod catalog;
pub mod verify;
