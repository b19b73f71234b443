class Broken {
    /* this comment goes on
    int x;
}
