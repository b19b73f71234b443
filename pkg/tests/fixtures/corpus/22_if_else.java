class Branch {
    String pick(boolean flag) {
        if (flag) {
            return "yes";
        } else {
            return "no";
        }
    }
}
