class Literals {
    void fill() {
        i = 0;
        i = 123456789;
        l = 123L;
        d = 3.25;
        d = 1e10;
        d = 2.5E-3;
        f = 1.5F;
        f = 0.25f;
        d = 7d;
        c = 'a';
        c = '\t';
        c = '\\';
        c = '\'';
        s = "";
        s = "plain";
        s = "tab\there";
        s = "backslash \\ quote \"";
        ok = true;
        ok = false;
        ref = null;
    }
}
