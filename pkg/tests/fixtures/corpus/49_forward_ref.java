class Forward {
    int early() {
        return later() + tail;
    }

    int later() {
        return 5;
    }

    int tail = 3;
}
