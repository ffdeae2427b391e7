pub mod formats;
pub mod svg;
pub mod verify;
