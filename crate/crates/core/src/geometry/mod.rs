//! Planar geometry: isometries generic over the scalar, exact symmetry
//! diagrams for the square-lattice quotients, tile maps for the two
//! patterns, color transfer, and SVG output.

mod diagram;
mod isometry;
mod render;
mod tiles;
mod transfer;

pub use diagram::{corollary6_check, diagram, lift_p4m, Axis, AxisKind, Corollary6, RotationCenter, SymmetryDiagram};
pub use isometry::PlanarIsometry;
pub use render::{render_svg, Palette, RenderOptions, FOUR_COLOR_NUMBERS};
pub use tiles::{Pattern, Polygon, TileMap, EQUIVARIANCE_TOLERANCE};
pub use transfer::{table2_rows, transfer_coloring, Table2Row};
