pub mod families;
pub mod gp;
pub mod group;
pub mod groupfile;
pub mod perm;
pub mod report;
