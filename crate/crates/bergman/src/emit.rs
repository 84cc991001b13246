pub fn _placeholder_emit() {}
