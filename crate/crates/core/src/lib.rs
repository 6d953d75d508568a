pub mod code;
pub mod error;
pub mod graph;
pub mod grid;
pub mod planarity;
pub mod line;
pub mod search;
pub mod plane;
pub mod space;
pub mod dimension;
pub mod enumerate;
pub mod render;
pub mod cli;
