class Annotated {
    @Deprecated
    public static final int LIMIT = 100;
    @Inject private Helper helper;
}
