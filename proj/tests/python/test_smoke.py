import hstab._core as core
