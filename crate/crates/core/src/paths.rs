pub struct Letter;
pub struct GroundLabel;
pub struct SemiPath;
pub struct FullPath;
