class Strings {
    // joins pieces with a separator
    String join(List<String> parts, String sep) {
        String out = "";
        for (int i = 0; i < parts.size(); i = i + 1) {
            if (i > 0) {
                out = concat(out, sep);
            }
            out = concat(out, parts.get(i));
        }
        return out;
    }

    @Override
    String describe() {
        return "Strings: grüße";
    }

    String concat(String a, String b) {
        return a;
    }
}
