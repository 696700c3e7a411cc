//! Exact arithmetic and incidence geometry for the Moufang set attached to a
//! polarity of an exceptional Moufang quadrangle of type F4 in characteristic 2.

pub mod blocks;
pub mod error;
pub mod gf2x;
pub mod kfield;
pub mod lfield;
pub mod linalg;
mod modgcd;
pub mod moufang;
pub mod net;
pub mod parse;
pub mod poly2;
pub mod quadrangle;
pub mod reconstruct;
pub mod root_groups;
pub mod sample;
pub mod uinf;
pub mod validate;
pub mod verify;

pub use blocks::{Block, BlockKind, SpecialCircle};
pub use error::{Error, Result};
pub use kfield::KElem;
pub use lfield::{FieldInstance, LElem};
pub use moufang::{MoufangPoint, MoufangSet};
pub use poly2::Poly2;
pub use quadrangle::{Flag, QLine, QPoint, Quadrangle};
pub use root_groups::{Eq3Slot, R1Coord, R2Coord, Relations, UPlusElem};
