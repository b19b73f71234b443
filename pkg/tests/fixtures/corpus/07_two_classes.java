class First {
    int a;
}

class Second {
    int b;
}
